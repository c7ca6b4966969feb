#include "azi/cli.hpp"

int main(int argc, char** argv) {
    return azi::cli::run_main(argc, argv);
}
