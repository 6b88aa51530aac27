#pragma once

// JSON encodings of the analysis results and the common report envelope.

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include <json.hpp>

#include "kzdisk/cyclic_core.hpp"
#include "kzdisk/flat_model.hpp"
#include "kzdisk/lyapunov.hpp"
#include "kzdisk/search.hpp"

namespace kzdisk {

inline constexpr std::string_view kToolVersion = "1.0.0";

using Json = nlohmann::json;

Json analysis_payload(const CoverParams& p);
Json search_payload(const SearchReport& r);
Json origami_json(const Origami& o);
Json flat_payload(const PillowComplex& c);
Json lyapunov_payload(const LyapunovEstimate& e, const Json& source);
Json spectrum_payload(std::span<const double> kz, int sigma, std::span<const double> values);

/// Envelope around a payload; `kind` names the payload variant.
Json envelope(std::string_view command, Json params_echo, std::string_view kind, Json payload,
              std::string timestamp);

/// Current UTC time, ISO 8601 with seconds.
std::string utc_timestamp();

}  // namespace kzdisk
