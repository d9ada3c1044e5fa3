#pragma once
#ifdef __cplusplus
extern "C" {
#endif
const char* hk_version(void);
#ifdef __cplusplus
}
#endif
