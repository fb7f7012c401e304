#include "bincollatz/analysis.hpp"
#include "bincollatz/errors.hpp"

namespace bincollatz {

FamilyTag parse_family_tag(std::string_view text) {
  if (text == "alpha") return FamilyTag::Alpha;
  if (text == "beta") return FamilyTag::Beta;
  if (text == "gamma") return FamilyTag::Gamma;
  throw MalformedInput("unknown family '" + std::string(text) + "' (expected alpha, beta or gamma)");
}

FamilyProbeReport family_orbit_probe(FamilyTag tag, std::size_t k_max, std::size_t step_cap) {
  if (k_max == 0) throw DomainError("family_orbit_probe: k_max must be positive");
  FamilyProbeReport report;
  report.tag = tag;
  for (std::size_t k = 1; k <= k_max; ++k) {
    const auto y = family_member({tag, k});
    FamilyProbeEntry entry{k, y.length(), binary_stopping_time(y, step_cap)};
    if (!entry.stopping_time) ++report.unresolved;
    if (tag != FamilyTag::Gamma && entry.stopping_time != std::optional<std::size_t>{2}) {
      report.identity_holds = false;
    }
    report.entries.push_back(entry);
  }
  return report;
}

}  // namespace bincollatz
