#define ENABLE_GPU 1
#define ENABLE_VULKAN 0
#define ENABLE_LEGACY_IO 0
#define USE_FAST_MATH 1
#define ENABLE_TRACING 1
#define ENABLE_OLD_ALLOCATOR 0
