#pragma once

namespace mosaic {

/// Worker count for parallel kernels: the OpenMP default, capped by the
/// MOSAIC_THREADS environment variable when it holds a positive integer.
int worker_count();

}  // namespace mosaic
