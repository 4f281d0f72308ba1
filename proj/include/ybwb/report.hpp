#ifndef YBWB_REPORT_HPP
#define YBWB_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "ybwb/scalar.hpp"

namespace ybwb {

enum class IdentityStatus { Exact, UpToSign, Failed };

/// One verified (or failed) identity in a construction report. For
/// matches up to a recorded global scalar the scalar is stored in
/// `sign` ("-1", "-2", "1/2", ...).
struct Identity {
  std::string name;
  IdentityStatus status = IdentityStatus::Failed;
  std::optional<Scalar> sign;

  static Identity exact(std::string n) { return {std::move(n), IdentityStatus::Exact, std::nullopt}; }
  static Identity scaled(std::string n, Scalar s) {
    return {std::move(n), s == 1 ? IdentityStatus::Exact : IdentityStatus::UpToSign, s};
  }
  static Identity failed(std::string n) { return {std::move(n), IdentityStatus::Failed, std::nullopt}; }

  bool ok() const { return status != IdentityStatus::Failed; }
};

struct CarrierSummary {
  int dim = 0;
  bool matches_parabolic = false;
};

/// Report record emitted by the analysis pipelines and sweeps.
struct Report {
  std::string construction;
  int n = 0;
  std::optional<int> i;
  std::optional<std::uint64_t> seed;
  std::vector<Identity> identities;
  std::optional<CarrierSummary> carrier;

  void add(Identity id) { identities.push_back(std::move(id)); }
  bool all_ok() const {
    for (const auto& id : identities)
      if (!id.ok()) return false;
    return true;
  }
  const Identity* find(const std::string& name) const {
    for (const auto& id : identities)
      if (id.name == name) return &id;
    return nullptr;
  }
};

std::string status_string(IdentityStatus s);

}  // namespace ybwb

#endif
