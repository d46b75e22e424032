#ifndef GPU_RASTER_H_
#define GPU_RASTER_H_

void InitRaster();

#endif
