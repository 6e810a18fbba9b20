#include "tvchow/commands.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "tvchow/errors.hpp"
#include "tvchow/selfcheck.hpp"

namespace tvchow {

namespace {

std::size_t parse_size(const std::string& text, const std::string& what) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos || text.size() > 18)
    throw ParseError(0, 0, "malformed " + what + " '" + text + "'");
  return std::stoull(text);
}

std::size_t effective_N(const ComputationDocument& doc, const CommandOptions& opts) {
  if (opts.N) return *opts.N;
  if (doc.N) return *doc.N;
  throw ParseError(0, 0, "N is not given: pass --N or add an 'N' line to the document");
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

void print_report(const ValidationReport& r, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::csv) {
    out << "severity,message\n";
    for (const auto& f : r.failures) out << "error," << csv_field(f) << "\n";
    for (const auto& w : r.warnings) out << "warning," << csv_field(w) << "\n";
    out << (r.ok() ? "status,valid\n" : "status,invalid\n");
    return;
  }
  for (const auto& f : r.failures) out << "error: " << f << "\n";
  for (const auto& w : r.warnings) out << "warning: " << w << "\n";
  out << (r.ok() ? "valid\n" : "invalid\n");
}

// Runs body and maps library errors to exit codes.
template <class Body>
int guarded(std::ostream& err, Body body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ResourceCapError& e) {
    err << "resource cap: " << e.what() << "\n";
    return kExitResourceCap;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}

}  // namespace

KRange parse_k_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const std::size_t k = parse_size(text, "k range");
    return {k, k};
  }
  KRange r{parse_size(text.substr(0, dots), "k range"), parse_size(text.substr(dots + 2), "k range")};
  if (r.lo > r.hi) throw ParseError(0, 0, "empty k range '" + text + "'");
  return r;
}

DowngradeMode parse_mode(const std::string& text) {
  if (text == "auto") return DowngradeMode::automatic;
  if (text == "geometric") return DowngradeMode::geometric;
  if (text == "counting") return DowngradeMode::counting;
  throw ParseError(0, 0, "unknown mode '" + text + "'; use geometric, counting or auto");
}

OutputFormat parse_format(const std::string& text) {
  if (text == "text") return OutputFormat::text;
  if (text == "csv") return OutputFormat::csv;
  throw ParseError(0, 0, "unknown format '" + text + "'; use text or csv");
}

std::string ResultTable::to_csv() const {
  std::ostringstream out;
  out << "label,N,k,r,v,t,sum,rhs,identity,k_le_Nd\n";
  for (const auto& row : rows)
    out << csv_field(row.label) << "," << N << "," << row.k << "," << row.r.get_str() << "," << row.v.get_str() << ","
        << row.t.get_str() << "," << row.sum.get_str() << "," << row.rhs.get_str() << ","
        << (row.identity_holds ? "pass" : "fail") << "," << (row.within_bound ? "yes" : "no") << "\n";
  return out.str();
}

std::string ResultTable::to_text() const {
  const std::vector<std::string> header = {"label", "k", "|r_k|", "|v_k|", "|t_k|", "sum", "rhs", "identity", "k<=Nd"};
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : rows)
    cells.push_back({row.label, std::to_string(row.k), row.r.get_str(), row.v.get_str(), row.t.get_str(), row.sum.get_str(),
                     row.rhs.get_str(), row.identity_holds ? "pass" : "FAIL", row.within_bound ? "yes" : "no"});
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = header[c].size();
    for (const auto& r : cells) width[c] = std::max(width[c], r[c].size());
  }
  std::ostringstream out;
  out << "N = " << N << ", d = " << d << "\n";
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (c) out << "  ";
      // Label left-aligned, numbers right-aligned.
      if (c == 0) out << r[c] << std::string(width[c] - r[c].size(), ' ');
      else out << std::string(width[c] - r[c].size(), ' ') << r[c];
    }
    out << "\n";
  };
  line(header);
  for (const auto& r : cells) line(r);
  for (const auto& w : warnings) out << "warning: " << w << "\n";
  return out.str();
}

ValidationReport validate_document(const ComputationDocument& doc) {
  ValidationReport r;
  std::optional<MarkedFansyDivisor> X;
  try {
    X = resolve_variety(doc);
  } catch (const Error& e) {
    r.fail(std::string("bundle: ") + e.what());
  }
  if (X) {
    r.merge(validate_marked_fansy(*X));
    if (doc.variety && doc.bundle) {
      try {
        const MarkedFansyDivisor from_bundle =
            toric_downgrade(projectivized_bundle_fan(doc.bundle->base, doc.bundle->twist));
        if (!(from_bundle == *doc.variety)) r.fail("the bundle block does not produce the given fansy divisor");
      } catch (const Error& e) {
        r.fail(std::string("bundle: ") + e.what());
      }
    }
  }
  if (doc.profile) {
    r.merge(doc.profile->validate());
    if (X && doc.profile->d != X->rank) r.fail("profile: d differs from the rank of the variety");
    if (X && doc.profile->d == X->rank) r.merge(check_profile(*doc.profile, reference_fvector(doc, *X)));
  }
  if (doc.reference && X && doc.reference->size() > X->rank + 1)
    r.fail("reference f-vector is longer than d+1");
  return r;
}

ResultTable count_table(const ComputationDocument& doc, const CommandOptions& opts) {
  const MarkedFansyDivisor X = resolve_variety(doc);
  const std::size_t N = effective_N(doc, opts);
  if (N == 0) throw ParseError(0, 0, "N must be positive");
  if (N > opts.caps.counting_N)
    throw ResourceCapError("N = " + std::to_string(N) + " exceeds the counting cap " + std::to_string(opts.caps.counting_N));
  const CountStrategy strategy = opts.strategy.value_or(doc.strategy.value_or(CountStrategy::example_table));
  const CountProfile p = doc.profile ? *doc.profile : enumerate_RVT(X, strategy);
  const FVector ref = reference_fvector(doc, X);
  const std::size_t d = p.d;
  const KRange range = opts.k.value_or(doc.k_range.value_or(KRange{0, d}));

  ResultTable table;
  table.N = N;
  table.d = d;
  for (const auto& w : check_profile(p, ref).warnings) table.warnings.push_back(w);
  const EquivariantCounts c = convolve_counts(p, N);
  for (std::size_t k = range.lo; k <= range.hi; ++k) {
    if (k > d + 1) {
      table.warnings.push_back("k = " + std::to_string(k) + " exceeds d+1 = " + std::to_string(d + 1) + "; row omitted");
      continue;
    }
    const SumIdentity s = sum_identity(p, ref, N, k);
    ResultRow row{doc.label, k, c.r[k], c.v[k], c.t[k], c.total(k), s.rhs, s.holds(), k <= N * d};
    if (!row.within_bound)
      table.warnings.push_back("k = " + std::to_string(k) + " exceeds N d = " + std::to_string(N * d) +
                               "; the approximation is too small for this k");
    table.rows.push_back(std::move(row));
  }
  return table;
}

int cmd_validate(const std::string& text, const CommandOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ComputationDocument doc = parse_document(text);
    const ValidationReport r = validate_document(doc);
    print_report(r, opts.format, out);
    return r.ok() ? kExitOk : kExitValidation;
  });
}

int cmd_downgrade(const std::string& text, const CommandOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ComputationDocument doc = parse_document(text);
    const ValidationReport r = validate_document(doc);
    if (!r.ok()) {
      print_report(r, OutputFormat::text, err);
      return kExitValidation;
    }
    const MarkedFansyDivisor X = resolve_variety(doc);
    const std::size_t N = effective_N(doc, opts);
    if (N == 0) throw ParseError(0, 0, "N must be positive");
    const std::size_t rank = N * X.rank;

    DowngradeMode mode = opts.mode;
    if (mode == DowngradeMode::automatic)
      mode = rank <= std::min(kAutoGeometricRank, opts.caps.geometric_rank) ? DowngradeMode::geometric : DowngradeMode::counting;
    if (mode == DowngradeMode::geometric && rank > opts.caps.geometric_rank)
      throw ResourceCapError("geometric mode needs ambient rank N d = " + std::to_string(rank) + " but the cap is " +
                             std::to_string(opts.caps.geometric_rank) + "; rerun with --mode counting");

    if (mode == DowngradeMode::counting) {
      out << "# counting-only output: per-dimension cell counts of Y_C\n";
      out << serialize(counts_document(build_YC_counts(X, N, opts.caps), doc.label));
      return kExitOk;
    }
    const QuotientFansyDivisor Y = build_YC(X, N, opts.exec, opts.caps);
    for (const auto& w : Y.report.warnings) err << "warning: " << w << "\n";
    if (!Y.report.ok()) {
      print_report(Y.report, OutputFormat::text, err);
      return kExitValidation;
    }
    out << serialize(quotient_document(Y, doc.label));
    return kExitOk;
  });
}

int cmd_count(const std::string& text, const CommandOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ComputationDocument doc = parse_document(text);
    const ValidationReport r = validate_document(doc);
    if (!r.ok()) {
      print_report(r, OutputFormat::text, err);
      return kExitValidation;
    }
    const ResultTable table = count_table(doc, opts);
    if (opts.format == OutputFormat::csv) {
      out << table.to_csv();
      for (const auto& w : table.warnings) err << "warning: " << w << "\n";
    } else {
      out << table.to_text();
    }
    const bool identity = std::all_of(table.rows.begin(), table.rows.end(), [](const ResultRow& row) { return row.identity_holds; });
    return identity ? kExitOk : kExitValidation;
  });
}

int cmd_selfcheck(const CommandOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto results = run_selfcheck(opts.exec);
    bool all = true;
    for (const auto& c : results) {
      out << (c.passed ? "PASS " : "FAIL ") << c.name;
      if (!c.detail.empty()) out << " (" << c.detail << ")";
      out << "\n";
      all = all && c.passed;
    }
    return all ? kExitOk : kExitValidation;
  });
}

}  // namespace tvchow
