#include "survradar/cli.hpp"

int main(int argc, char** argv) { return survradar::dispatch(argc, argv); }
