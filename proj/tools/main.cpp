#include "fibgf/cli_app.hpp"

int main(int argc, char** argv) {
    return fibgf::cli::run(argc, argv);
}
