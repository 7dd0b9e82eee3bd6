#include "nlca/io.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace nlca {

namespace {

int bytes_per_sample(SampleType t)
{
    switch (t) {
    case SampleType::u8: return 1;
    case SampleType::i16: return 2;
    case SampleType::f32: return 4;
    }
    throw std::invalid_argument("unknown sample type");
}

std::vector<unsigned char> read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open file for reading: " + path);
    in.seekg(0, std::ios::end);
    const auto size = static_cast<std::size_t>(in.tellg());
    in.seekg(0, std::ios::beg);
    std::vector<unsigned char> bytes(size);
    if (size > 0)
        in.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(size));
    if (!in)
        throw std::runtime_error("failed to read file: " + path);
    return bytes;
}

float decode_sample(const unsigned char* p, SampleType t)
{
    switch (t) {
    case SampleType::u8:
        return static_cast<float>(*p);
    case SampleType::i16: {
        const auto u = static_cast<std::uint16_t>(p[0] | (std::uint16_t(p[1]) << 8));
        return static_cast<float>(static_cast<std::int16_t>(u));
    }
    case SampleType::f32: {
        const std::uint32_t u = std::uint32_t(p[0]) | (std::uint32_t(p[1]) << 8) |
                                (std::uint32_t(p[2]) << 16) | (std::uint32_t(p[3]) << 24);
        return std::bit_cast<float>(u);
    }
    }
    throw std::invalid_argument("unknown sample type");
}

// Clamp to the target range first, then round half away from zero.
long long clamp_round(float v, double lo, double hi)
{
    const double c = std::min(hi, std::max(lo, static_cast<double>(v)));
    return std::llround(c);
}

void encode_sample(float v, SampleType t, unsigned char* p)
{
    switch (t) {
    case SampleType::u8:
        *p = static_cast<unsigned char>(clamp_round(v, 0.0, 255.0));
        return;
    case SampleType::i16: {
        const auto s = static_cast<std::int16_t>(clamp_round(v, -32768.0, 32767.0));
        const auto u = static_cast<std::uint16_t>(s);
        p[0] = static_cast<unsigned char>(u & 0xff);
        p[1] = static_cast<unsigned char>(u >> 8);
        return;
    }
    case SampleType::f32: {
        const auto u = std::bit_cast<std::uint32_t>(v);
        p[0] = static_cast<unsigned char>(u & 0xff);
        p[1] = static_cast<unsigned char>((u >> 8) & 0xff);
        p[2] = static_cast<unsigned char>((u >> 16) & 0xff);
        p[3] = static_cast<unsigned char>((u >> 24) & 0xff);
        return;
    }
    }
    throw std::invalid_argument("unknown sample type");
}

std::string sidecar_path(const std::string& data_path)
{
    return data_path + ".json";
}

} // namespace

std::string to_string(SampleType t)
{
    switch (t) {
    case SampleType::u8: return "u8";
    case SampleType::i16: return "i16";
    case SampleType::f32: return "f32";
    }
    throw std::invalid_argument("unknown sample type");
}

SampleType sample_type_from_string(const std::string& s)
{
    if (s == "u8") return SampleType::u8;
    if (s == "i16") return SampleType::i16;
    if (s == "f32") return SampleType::f32;
    throw std::runtime_error("unknown sample type '" + s + "' (expected u8, i16 or f32)");
}

Volume3D load_raw(const std::string& path, const VolumeHeader& header)
{
    if (header.endianness != Endianness::little)
        throw std::runtime_error("raw loader supports little-endian samples only");

    const int bps = bytes_per_sample(header.sample_type);
    const auto [nx, ny, nz] = header.dims;
    Volume3D out(nx, ny, nz);
    out.set_spacing(header.spacing[0], header.spacing[1], header.spacing[2]);

    const auto bytes = read_file(path);
    const std::size_t expected = out.size() * static_cast<std::size_t>(bps);
    if (bytes.size() != expected)
        throw std::runtime_error("raw file size mismatch for " + path + ": expected " +
                                 std::to_string(expected) + " bytes, found " +
                                 std::to_string(bytes.size()));

    for (std::size_t v = 0; v < out.size(); ++v)
        out[v] = decode_sample(bytes.data() + v * bps, header.sample_type);
    return out;
}

void save_raw(const Volume3D& volume, const std::string& path, SampleType sample_type)
{
    const int bps = bytes_per_sample(sample_type);
    std::vector<unsigned char> bytes(volume.size() * static_cast<std::size_t>(bps));
    for (std::size_t v = 0; v < volume.size(); ++v)
        encode_sample(volume[v], sample_type, bytes.data() + v * bps);

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot open file for writing: " + path);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out)
        throw std::runtime_error("failed to write file: " + path);
    out.close();

    nlohmann::json sidecar = {
        {"dims", {volume.nx(), volume.ny(), volume.nz()}},
        {"spacing", {volume.spacing()[0], volume.spacing()[1], volume.spacing()[2]}},
        {"dtype", to_string(sample_type)},
        {"endian", "little"},
    };
    std::ofstream side(sidecar_path(path), std::ios::trunc);
    if (!side)
        throw std::runtime_error("cannot write sidecar: " + sidecar_path(path));
    side << sidecar.dump(2) << "\n";
}

VolumeHeader load_sidecar(const std::string& data_path)
{
    std::ifstream in(sidecar_path(data_path));
    if (!in)
        throw std::runtime_error("missing sidecar " + sidecar_path(data_path) +
                                 " (raw volumes need a JSON sidecar)");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("malformed sidecar " + sidecar_path(data_path) + ": " +
                                 e.what());
    }

    VolumeHeader h;
    const auto dims = j.at("dims");
    const auto spacing = j.at("spacing");
    if (dims.size() != 3 || spacing.size() != 3)
        throw std::runtime_error("sidecar dims/spacing must have 3 entries");
    for (int a = 0; a < 3; ++a) {
        h.dims[a] = dims[a].get<int>();
        h.spacing[a] = spacing[a].get<double>();
    }
    h.sample_type = sample_type_from_string(j.at("dtype").get<std::string>());
    const auto endian = j.value("endian", std::string("little"));
    if (endian != "little")
        throw std::runtime_error("unsupported endianness '" + endian + "'");
    return h;
}

namespace {

template <typename T>
T read_le(const unsigned char* base, std::size_t offset)
{
    static_assert(std::endian::native == std::endian::little,
                  "NIfTI reader assumes a little-endian host");
    T v;
    std::memcpy(&v, base + offset, sizeof(T));
    return v;
}

} // namespace

std::pair<Volume3D, VolumeHeader> load_nifti(const std::string& path)
{
    const auto bytes = read_file(path);
    if (bytes.size() < 352)
        throw std::runtime_error("NIfTI file too small: " + path);

    const auto sizeof_hdr = read_le<std::int32_t>(bytes.data(), 0);
    const char* magic = reinterpret_cast<const char*>(bytes.data() + 344);
    if (sizeof_hdr != 348 || std::strncmp(magic, "n+1", 3) != 0 || magic[3] != '\0')
        throw std::runtime_error("bad NIfTI-1 magic in " + path);

    const auto ndim = read_le<std::int16_t>(bytes.data(), 40);
    if (ndim != 3)
        throw std::runtime_error("only 3-D NIfTI volumes are supported, dim[0] = " +
                                 std::to_string(ndim));

    VolumeHeader header;
    for (int a = 0; a < 3; ++a) {
        header.dims[a] = read_le<std::int16_t>(bytes.data(), 40 + 2 * (a + 1));
        const float pd = read_le<float>(bytes.data(), 76 + 4 * (a + 1));
        header.spacing[a] = pd > 0.0f ? static_cast<double>(pd) : 1.0;
    }

    const auto datatype = read_le<std::int16_t>(bytes.data(), 70);
    switch (datatype) {
    case 2: header.sample_type = SampleType::u8; break;
    case 4: header.sample_type = SampleType::i16; break;
    case 16: header.sample_type = SampleType::f32; break;
    default:
        throw std::runtime_error("unsupported NIfTI datatype code " +
                                 std::to_string(datatype) +
                                 " (supported: 2 uint8, 4 int16, 16 float32)");
    }

    const auto vox_offset = static_cast<std::size_t>(read_le<float>(bytes.data(), 108));
    const float scl_slope = read_le<float>(bytes.data(), 112);
    const float scl_inter = read_le<float>(bytes.data(), 116);

    const int bps = bytes_per_sample(header.sample_type);
    Volume3D out(header.dims[0], header.dims[1], header.dims[2]);
    out.set_spacing(header.spacing[0], header.spacing[1], header.spacing[2]);

    const std::size_t need = vox_offset + out.size() * static_cast<std::size_t>(bps);
    if (vox_offset < 348 || bytes.size() < need)
        throw std::runtime_error("NIfTI data section truncated in " + path);

    for (std::size_t v = 0; v < out.size(); ++v)
        out[v] = decode_sample(bytes.data() + vox_offset + v * bps, header.sample_type);

    if (scl_slope != 0.0f)
        for (float& v : out.values())
            v = v * scl_slope + scl_inter;

    return {std::move(out), header};
}

Volume3D load_volume(const std::string& path, const std::string& format)
{
    std::string fmt = format;
    if (fmt == "auto") {
        const auto ext = std::filesystem::path(path).extension().string();
        fmt = (ext == ".nii") ? "nifti" : "raw";
    }
    if (fmt == "nifti")
        return load_nifti(path).first;
    if (fmt == "raw")
        return load_raw(path, load_sidecar(path));
    throw std::runtime_error("unknown volume format '" + format + "' (raw or nifti)");
}

} // namespace nlca
