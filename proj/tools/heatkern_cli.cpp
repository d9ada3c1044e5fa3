#include "heatkern.h"
#include <cstdio>
int main() { std::printf("%s\n", hk_version()); return 0; }
