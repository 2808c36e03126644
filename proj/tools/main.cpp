#include "qibonn/harness.hpp"

int main(int argc, char** argv) { return qibonn::cli_main(argc, argv); }
