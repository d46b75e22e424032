namespace features {
const bool kEnableSmoothScroll = true;
const bool kEnableTabGroups = false;
const bool kEnablePrerender = true;
const bool kDisableLegacyCodec = false;
const bool kEnableGpuRaster = true;
}
