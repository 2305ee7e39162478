#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "plasma/grid.hpp"
#include "plasma/sampler.hpp"

namespace plasma {

using Json = nlohmann::ordered_json;

// 17 significant digits, so values round-trip exactly.
std::string fmt17(double v);

std::uint64_t fnv1a64(std::string_view bytes);
std::string hex64(std::uint64_t v);

// {version, config_hash, seed}; the hash covers the canonical dump of `config`.
Json provenance(const Json& config, std::uint64_t seed);

std::string grid_csv(const KernelGrid& g);        // re_z,im_z,re_val,im_val
std::string residual_csv(const ResidualReport& r);  // x,y,residual
std::string histogram_csv(const Histogram1D& h);   // bin_center,estimate,stderr

Json grid_json(const KernelGrid& g);
Json residual_json(const ResidualReport& r);
Json histogram_json(const Histogram1D& h);

// Throws std::runtime_error when the file cannot be written.
void write_text(const std::string& path, std::string_view text);

}  // namespace plasma
