#include <knotfit/cli.hpp>

int main(int argc, char** argv) {
    return knotfit::run_cli(argc, argv);
}
