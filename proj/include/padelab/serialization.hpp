#ifndef PADELAB_SERIALIZATION_HPP
#define PADELAB_SERIALIZATION_HPP

#include "padelab/gap_transfer.hpp"
#include "padelab/pade.hpp"
#include "padelab/pole_lab.hpp"
#include "padelab/universal_builder.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace padelab {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Values. Every decoder rejects unknown object keys and reports the offending path in a ParseError.
Json to_json(const GaussianRational& z);
Json to_json(const Polynomial& p);
Json to_json(const PowerSeries& s);
Json to_json(const RationalFunction& r);
Json to_json(const CompactSetSpec& k);
Json to_json(const DiskSampleSpec& l);
Json to_json(const DenominatorSpec& d);
Json to_json(const UniversalTask& t);
Json to_json(const GapSchedule& s);
Json to_json(const PadeResult& r);
Json to_json(const PolePlacementWitness& w);
Json to_json(const BuildTrace& t);
Json to_json(const GapSeries& g);
Json to_json(const GapBuild& g);

GaussianRational gaussian_from_json(const Json& j, const std::string& path);
Polynomial polynomial_from_json(const Json& j, const std::string& path);
PowerSeries series_from_json(const Json& j, const std::string& path);
RationalFunction rational_function_from_json(const Json& j, const std::string& path);
/// Accepts {"samples": [...], "margin", "excluded"} or a {"circle": {"center","radius","count"}} generator
/// in place of "samples".
CompactSetSpec compact_set_from_json(const Json& j, const std::string& path);
/// Accepts {"samples", "radius"} or {"radius", "rings", "per_ring"}.
DiskSampleSpec disk_from_json(const Json& j, const std::string& path);
DenominatorSpec denominator_from_json(const Json& j, const std::string& path);
UniversalTask task_from_json(const Json& j, const std::string& path);
/// "phi" may be omitted, in which case the minimal weight table is used.
GapSchedule schedule_from_json(const Json& j, const std::string& path);
PadeResult pade_result_from_json(const Json& j, const std::string& path);
BuildTrace trace_from_json(const Json& j, const std::string& path);
GapSeries gap_series_from_json(const Json& j, const std::string& path);
GapBuild gap_build_from_json(const Json& j, const std::string& path);

/// Wraps a value as a top-level document {"schema_version": 1, "kind": kind, ...fields}.
Json make_document(std::string_view kind, Json body);
/// Checks schema_version and kind and returns the document with both keys removed.
Json open_document(const Json& doc, std::string_view kind);

Json parse_json_text(const std::string& text, const std::string& source);
Json read_json_file(const std::string& path);
/// Canonical serialization: two-space indent and a trailing newline.
std::string dump_json(const Json& j);

/// FNV-1a 64-bit hash of the canonical text of a polynomial, as 16 hex digits.
std::string denominator_hash(const Polynomial& p);

// CSV writers. Columns are fixed and documented in the README.
void write_poles_csv(std::ostream& os, const std::vector<PadeResult>& results, unsigned precision_bits);
void write_certificates_csv(std::ostream& os, const BuildTrace& trace);
void write_gap_certificates_csv(std::ostream& os, const GapBuild& build);
void write_transfer_csv(std::ostream& os, const Transfer& transfer);

}  // namespace padelab

#endif
