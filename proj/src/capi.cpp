#include "heatkern.h"
extern "C" const char* hk_version(void) { return "0.1.0"; }
