#pragma once

#include <string>
#include <utility>

#include "nlca/volume.hpp"

namespace nlca {

/// On-disk description of a bare raw sample array. Samples are stored
/// little-endian in x-fastest order; the JSON sidecar next to the data file
/// carries the same fields as {"dims", "spacing", "dtype", "endian"}.
struct VolumeHeader {
    std::array<int, 3> dims{0, 0, 0};
    std::array<double, 3> spacing{1.0, 1.0, 1.0};
    SampleType sample_type = SampleType::f32;
    Endianness endianness = Endianness::little;
};

std::string to_string(SampleType t);
SampleType sample_type_from_string(const std::string& s);

/// Read a bare raw sample file. The file size must equal
/// nx*ny*nz*bytes_per_sample; values are promoted to float without rescaling.
Volume3D load_raw(const std::string& path, const VolumeHeader& header);

/// Write volume samples as raw little-endian data plus a "<path>.json"
/// sidecar. Integral targets are clamped to the type range and then rounded
/// half away from zero; float32 round-trips bit-exactly.
void save_raw(const Volume3D& volume, const std::string& path, SampleType sample_type);

/// Sidecar helpers for the raw format ("<data path>.json").
VolumeHeader load_sidecar(const std::string& data_path);

/// Read a single-file uncompressed NIfTI-1 volume (348-byte header, magic
/// "n+1", datatype uint8/int16/float32, dim[0] == 3). scl_slope/scl_inter
/// are applied when scl_slope != 0. Orientation transforms are ignored.
std::pair<Volume3D, VolumeHeader> load_nifti(const std::string& path);

/// Load either format, choosing by `format` ("raw", "nifti", or "auto",
/// where "auto" picks NIfTI for a .nii extension and raw+sidecar otherwise).
Volume3D load_volume(const std::string& path, const std::string& format = "auto");

} // namespace nlca
