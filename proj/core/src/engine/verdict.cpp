#include "pk/engine/verdict.hpp"

namespace pk::engine {

Verdict Verdict::valid(Step k, std::size_t invariants_used)
{
  Verdict v;
  v.kind = Kind::Valid;
  v.k = k;
  v.invariants_used = invariants_used;
  return v;
}

Verdict Verdict::invalid(Step k, Trace trace)
{
  Verdict v;
  v.kind = Kind::Invalid;
  v.k = k;
  v.trace = std::move(trace);
  return v;
}

Verdict Verdict::unknown(std::string reason, std::string diagnostic)
{
  Verdict v;
  v.kind = Kind::Unknown;
  v.reason = std::move(reason);
  v.diagnostic = std::move(diagnostic);
  return v;
}

std::string_view to_string(Verdict::Kind kind)
{
  switch (kind) {
    case Verdict::Kind::Valid: return "valid";
    case Verdict::Kind::Invalid: return "invalid";
    case Verdict::Kind::Unknown: return "unknown";
  }
  return "unknown";
}

std::string headline(const Verdict& v)
{
  switch (v.kind) {
    case Verdict::Kind::Valid:
      return "VALID k=" + std::to_string(v.k) + " invariants=" + std::to_string(v.invariants_used);
    case Verdict::Kind::Invalid:
      return "INVALID k=" + std::to_string(v.k);
    case Verdict::Kind::Unknown:
      return "UNKNOWN reason=" + v.reason;
  }
  return "UNKNOWN reason=internal-error";
}

}  // namespace pk::engine
