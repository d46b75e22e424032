#include "features.h"
#include "gpu.h"

static int gpu_ready;

void gpu_init(void) {
#ifdef ENABLE_GPU
    gpu_ready = 1;
#endif
    if (ENABLE_GPU) {
        if (cfg.ENABLE_VULKAN) {
            vk_init();
        }
    }
}
