#pragma once

#include "fractops/attractor.hpp"
#include "fractops/raster.hpp"
#include "fractops/tops.hpp"
#include "fractops/transform.hpp"

/// Single-threaded kernels written without OpenMP. They define the expected
/// output of the parallel kernels bit for bit.
namespace fractops::reference {

/// Runs the worker streams one after another.
AttractorMask render_chaos_serial(const Ifs& ifs, const ChaosOptions& options, const PixelGrid& grid);

/// The same level-by-level traversal, one node at a time.
ConvergedRender render_converged_serial(const Ifs& ifs, const PixelGrid& grid, const ConvergedOptions& options = {});

RasterPicture transform_picture_serial(const DomainPartition& part_f, const Ifs& G, const RasterPicture& picture_g,
                                       int depth);

}  // namespace fractops::reference
