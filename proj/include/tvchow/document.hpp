#pragma once

#include <optional>
#include <string>

#include "tvchow/bundle.hpp"
#include "tvchow/chow_count.hpp"
#include "tvchow/downgrade.hpp"

namespace tvchow {

/// Base fan plus one twist coefficient per ray.
struct BundleSpec {
  Fan base;
  Twist twist;

  bool operator==(const BundleSpec&) const = default;
};

/// Inclusive range of codimensions k.
struct KRange {
  std::size_t lo = 0;
  std::size_t hi = 0;

  bool operator==(const KRange&) const = default;
};

/// Provenance of a quotient written by the downgrade command.
struct ProvenanceBlock {
  std::map<PointOnLine, std::vector<CellProvenance>> slices;
  std::vector<ConeProvenance> tail;
  std::vector<ConeProvenance> marked;

  bool operator==(const ProvenanceBlock&) const = default;
};

/// The text format read and written by the command-line tool. See docs/document-format.md.
struct ComputationDocument {
  std::string label;
  std::optional<MarkedFansyDivisor> variety;
  std::optional<BundleSpec> bundle;
  std::optional<std::size_t> N;
  std::optional<KRange> k_range;
  std::optional<CountStrategy> strategy;
  std::optional<CountProfile> profile;
  std::optional<FVector> reference;  // f-vector entering the closed form S
  std::optional<ProvenanceBlock> provenance;
  std::optional<QuotientCounts> counts;

  bool operator==(const ComputationDocument&) const = default;
};

/// Throws ParseError with the position of the offending token.
ComputationDocument parse_document(const std::string& text);
std::string serialize(const ComputationDocument& doc);

/// The explicit variety, or the toric downgrade of the bundle fan.
MarkedFansyDivisor resolve_variety(const ComputationDocument& doc);
/// The reference f-vector, defaulting to that of the tail fan.
FVector reference_fvector(const ComputationDocument& doc, const MarkedFansyDivisor& X);

ComputationDocument quotient_document(const QuotientFansyDivisor& Y, const std::string& label = {});
/// Inverse of quotient_document; the validation report is not stored and comes back empty.
QuotientFansyDivisor quotient_from_document(const ComputationDocument& doc);

ComputationDocument counts_document(const QuotientCounts& q, const std::string& label = {});

}  // namespace tvchow
