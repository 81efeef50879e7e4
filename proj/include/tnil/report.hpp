#pragma once
// JSON reports behind the command-line tool. Every report has the shape
//
//   { "schema": "tnil.report", "schema_version": 1, "command": ..., "inputs": {...},
//     "claims": [ { "name", "value", "provenance", ["holds"] }, ... ],
//     "warnings": [...], "passed": bool }
//
// provenance is one of "verified" (checked by computation in this run),
// "derived" (a value computed here, not itself a check) or "paper-assumed"
// (a known result that is used, not recomputed). Claims with a "holds" field
// are checks; the report passes iff all of them hold.
//
// Integers that fit in 64 bits are JSON numbers, larger ones decimal strings.
#include "tnil/groups.hpp"
#include "tnil/laurent.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace tnil::report {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

enum class Provenance { Verified, Derived, PaperAssumed };

std::string to_string(Provenance p);

Json big(const Integer& n);

class Builder {
public:
    explicit Builder(std::string command);

    Json& inputs() { return inputs_; }
    void derived(const std::string& name, Json value);
    void assumed(const std::string& name, Json value);
    /// A check; `value` carries its evidence.
    void check(const std::string& name, bool holds, Json value = nullptr,
               Provenance p = Provenance::Verified);
    void warn(const std::string& text) { warnings_.push_back(text); }

    bool passed() const { return passed_; }
    Json finish() const;

private:
    std::string command_;
    Json inputs_ = Json::object();
    Json claims_ = Json::array();
    Json warnings_ = Json::array();
    bool passed_ = true;
};

Json norm(const LaurentPoly& s);
Json parity_verify(int max_span, int max_abs_coeff);
Json phi_check(const LaurentPoly& s, unsigned k);
Json tower(const std::vector<LaurentPoly>& edges, bool checks, std::size_t cohn_trials = 50);
Json lcs(const Model& model, int depth, int J);
Json witness(const std::vector<LaurentPoly>& edges, int J, std::size_t samples, unsigned max_k);
Json cohn(unsigned m, std::size_t trials, std::size_t n, int deg, std::uint64_t seed);

/// "H", "G2" or "Gamma_<k>" (also "Gamma<k>"). Throws std::invalid_argument.
Model parse_model(const std::string& text);
/// Comma-separated Laurent literals; the empty string is the empty list.
std::vector<LaurentPoly> parse_edges(const std::string& csv);

/// Plain-text projection of a report.
std::string render_text(const Json& report);
/// Every claim has a provenance from the allowed set.
bool all_claims_labeled(const Json& report);

} // namespace tnil::report
