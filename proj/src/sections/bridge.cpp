#include "gaprig/sections/bridge.hpp"

#include <map>
#include <mutex>

#include "gaprig/embed/catalog.hpp"
#include "gaprig/error.hpp"
#include "gaprig/sections/quotient_path.hpp"

namespace gaprig {

const PolySection& cached_tau(const ModelPtr& model, int p) {
  static std::mutex mu;
  static std::map<std::pair<std::string, int>, PolySection> cache;
  std::lock_guard<std::mutex> lock(mu);
  const auto key = std::make_pair(model->spec().str(), p);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, tau_section(model, p)).first;
  return it->second;
}

namespace {

bool has_norm(const LieModel& m) {
  if (!m.spec().irreducible()) return false;
  const Factor& f = m.spec().factors[0];
  switch (f.type) {
    case DomainType::I: return f.p == f.q;
    case DomainType::II: return f.p % 2 == 0;
    case DomainType::III: return true;
    case DomainType::IV: return true;
  }
  return false;
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

}  // namespace

std::optional<BridgeRow> bridge_check(const EmbeddingSpec& e) {
  const std::string& name = e.name();
  BridgeRow row;
  row.embedding = name;
  row.h3 = check_h3(e).h3;
  const Plane plane = e.tangent_plane();
  const LieModel& target = e.target();
  const bool iv_pair = target.spec().irreducible() && e.source().spec().irreducible() &&
                       target.spec().factors[0].type == DomainType::IV &&
                       e.source().spec().factors[0].type == DomainType::IV && plane.dim() < target.p_count();
  if (iv_pair) {
    row.section = "quadric_discriminant";
    row.value = quadric_discriminant(plane);
    return row;
  }
  if (name == "III3_in_I33") {
    row.section = "tau_I33_p6";
    row.value = evaluate_t(cached_tau(e.target_ptr(), 6), plane);
    return row;
  }
  if (name == "II3_in_I33") {
    const QuotientComputation tangent = quotient_computation(target, plane.vectors());
    row.tangent_value = tangent.full_polarized;
    row.section = "tau_I33_p6_cotangent";
    row.value = evaluate_t(cached_tau(e.target_ptr(), 6), annihilator(plane));
    return row;
  }
  const bool disk_like =
      starts_with(name, "polydisk_") || starts_with(name, "diag_polydisk_") || starts_with(name, "diag_disk_in_");
  if (disk_like && has_norm(target)) {
    row.section = "tau_p" + std::to_string(plane.dim());
    row.value = evaluate_t(cached_tau(e.target_ptr(), plane.dim()), plane);
    return row;
  }
  return std::nullopt;
}

}  // namespace gaprig
