#pragma once

// JSON and CSV serialization for the public data types, plus the on-disk
// Macdonald-table cache (one JSON file per degree, schema-versioned).

#include <string>

#include "json.hpp"

#include "mh/classalgebra.hpp"
#include "mh/cutjoin.hpp"
#include "mh/hurwitz.hpp"
#include "mh/macdonald.hpp"
#include "mh/wavefn.hpp"

namespace mh {
namespace io {

using nlohmann::json;

inline constexpr int kCacheSchemaVersion = 1;

json symfun_to_json(const SymFunD& f);
SymFunD symfun_from_json(const json& j);

json macdonald_to_json(const MacdonaldTable& table);
std::string macdonald_to_csv(const MacdonaldTable& table);

json mh_result_to_json(const hurwitz::MHResult& r);

json operator_to_json(const cutjoin::OperatorD& op, bool hbar_one);
std::string operator_to_csv(const cutjoin::OperatorD& op, bool hbar_one);

json wave_to_json(const wave::WaveSeries& s);

json structure_to_json(const algebra::StructureTable& table);
std::string structure_to_csv(const algebra::StructureTable& table);
json eta_structure_to_json(const algebra::EtaStructure& es);

// Disk cache; load returns nullptr on missing file, bad schema, or mismatch.
std::shared_ptr<const MacdonaldTable> load_table_cache(const std::string& dir, int degree);
void save_table_cache(const std::string& dir, const MacdonaldTable& table);

// Installs load/save hooks pointing at dir (empty string disables).
void enable_disk_cache(const std::string& dir);

}  // namespace io
}  // namespace mh
