#include "tvchow/document.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "tvchow/errors.hpp"

namespace tvchow {

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      if (raw[i] == ' ' || raw[i] == '\t') {
        ++i;
        continue;
      }
      const std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t') ++i;
      line.tokens.push_back({raw.substr(start, i - start), start + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

class Parser {
 public:
  explicit Parser(std::vector<Line> lines, std::size_t last_line)
      : lines_(std::move(lines)), last_line_(last_line) {}

  ComputationDocument run();

 private:
  [[noreturn]] void fail(const Line& l, std::size_t t, const std::string& message) const {
    throw ParseError(l.number, t < l.tokens.size() ? l.tokens[t].column : 1, message);
  }
  [[noreturn]] void fail_at(const Line& l, const Token& tok, const std::string& message) const {
    throw ParseError(l.number, tok.column, message);
  }

  void expect_count(const Line& l, std::size_t n) const {
    if (l.tokens.size() < n) fail(l, l.tokens.size() - 1, "'" + l.tokens[0].text + "' expects more arguments");
    if (l.tokens.size() > n) fail(l, n, "unexpected token '" + l.tokens[n].text + "'");
  }

  Integer integer(const Line& l, std::size_t t) const {
    const Token& tok = l.tokens.at(t);
    try {
      const Rational q = parse_rational(tok.text);
      if (q.get_den() != 1 || tok.text.find('/') != std::string::npos) throw Error("");
      return q.get_num();
    } catch (const Error&) {
      fail_at(l, tok, "expected an integer, got '" + tok.text + "'");
    }
  }

  std::size_t natural(const Line& l, std::size_t t) const {
    const Integer z = integer(l, t);
    if (z < 0 || !z.fits_ulong_p()) fail(l, t, "expected a non-negative integer, got '" + l.tokens[t].text + "'");
    return z.get_ui();
  }

  PointOnLine point(const Line& l, std::size_t t) const {
    try {
      return parse_point(l.tokens.at(t).text);
    } catch (const Error&) {
      fail(l, t, "expected a point of P^1 ('inf' or a rational), got '" + l.tokens[t].text + "'");
    }
  }

  // "(a,b,...)" with rational entries; the length must match the rank once it is known.
  Vector vector(const Line& l, std::size_t t) {
    const Token& tok = l.tokens.at(t);
    const std::string& s = tok.text;
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') fail_at(l, tok, "expected a vector '(a,b,...)', got '" + s + "'");
    Vector v;
    const std::string body = s.substr(1, s.size() - 2);
    std::size_t start = 0;
    if (!body.empty()) {
      while (true) {
        const std::size_t comma = body.find(',', start);
        const std::string part = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        try {
          v.push_back(parse_rational(part));
        } catch (const Error&) {
          throw ParseError(l.number, tok.column + 1 + start, "malformed rational literal '" + part + "'");
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
    }
    if (!rank_) rank_ = v.size();
    if (v.size() != *rank_)
      fail_at(l, tok, "vector " + s + " has " + std::to_string(v.size()) + " entries, the rank is " + std::to_string(*rank_));
    return v;
  }

  std::vector<Integer> integers(const Line& l, std::size_t from) const {
    std::vector<Integer> out;
    for (std::size_t t = from; t < l.tokens.size(); ++t) out.push_back(integer(l, t));
    return out;
  }

  std::vector<std::uint64_t> masks(const Line& l, std::size_t t) const {
    const Token& tok = l.tokens.at(t);
    std::vector<std::uint64_t> out;
    std::istringstream in(tok.text);
    std::string part;
    while (std::getline(in, part, ',')) {
      if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos || part.size() > 19)
        fail_at(l, tok, "expected comma-separated face masks, got '" + tok.text + "'");
      out.push_back(std::stoull(part));
    }
    if (out.empty()) fail_at(l, tok, "expected comma-separated face masks");
    return out;
  }

  std::size_t need_rank(const Line& l) const {
    if (!rank_) fail(l, 0, "the rank is not known yet; put 'rank' first");
    return *rank_;
  }

  // Lines up to the matching 'end'.
  std::vector<const Line*> block(const Line& head) {
    std::vector<const Line*> body;
    while (pos_ < lines_.size()) {
      const Line& l = lines_[pos_++];
      if (l.tokens[0].text == "end") {
        expect_count(l, 1);
        return body;
      }
      body.push_back(&l);
    }
    throw ParseError(last_line_ + 1, 1, "block '" + head.tokens[0].text + "' opened on line " +
                                            std::to_string(head.number) + " is missing 'end'");
  }

  std::vector<Vector> vectors(const Line& l, std::size_t from) {
    std::vector<Vector> out;
    for (std::size_t t = from; t < l.tokens.size(); ++t) out.push_back(vector(l, t));
    return out;
  }

  std::vector<Cone> cones(const Line& head) {
    std::vector<Cone> out;
    for (const Line* l : block(head)) {
      if (l->tokens[0].text != "cone") fail(*l, 0, "expected 'cone', got '" + l->tokens[0].text + "'");
      auto gens = vectors(*l, 1);
      out.emplace_back(need_rank(*l), gens);
    }
    return out;
  }

  template <class Build>
  auto guarded(const Line& l, Build build) -> decltype(build()) {
    try {
      return build();
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      fail(l, 0, e.what());
    }
  }

  void parse_slice(const Line& head);
  void parse_bundle(const Line& head);
  void parse_profile(const Line& head);
  void parse_provenance(const Line& head);
  void parse_counts(const Line& head);

  std::vector<Line> lines_;
  std::size_t last_line_;
  std::size_t pos_ = 0;
  std::optional<std::size_t> rank_;
  std::set<std::string> seen_;

  ComputationDocument doc_;
  const Line* tail_line_ = nullptr;
  std::optional<std::vector<Cone>> tail_;
  std::map<PointOnLine, std::pair<const Line*, std::vector<Polyhedron>>> slices_;
  std::set<PointOnLine> special_;
  std::vector<Cone> marked_;
  bool has_marked_ = false;
};

void Parser::parse_slice(const Line& head) {
  expect_count(head, 2);
  const PointOnLine p = point(head, 1);
  if (slices_.count(p)) fail(head, 1, "second slice at " + p.to_string());
  std::vector<Polyhedron> cells;
  for (const Line* l : block(head)) {
    if (l->tokens[0].text != "cell") fail(*l, 0, "expected 'cell', got '" + l->tokens[0].text + "'");
    std::vector<Vector> groups[3];
    int current = -1;
    for (std::size_t t = 1; t < l->tokens.size(); ++t) {
      const std::string& w = l->tokens[t].text;
      if (w == "vertices" || w == "rays" || w == "lines") {
        const int g = w == "vertices" ? 0 : w == "rays" ? 1 : 2;
        if (g <= current) fail(*l, t, "'" + w + "' out of order; use vertices, rays, lines");
        current = g;
      } else if (current < 0) {
        fail(*l, t, "expected 'vertices'");
      } else {
        groups[current].push_back(vector(*l, t));
      }
    }
    if (groups[0].empty()) fail(*l, 0, "a cell needs at least one vertex");
    const std::size_t r = need_rank(*l);
    cells.push_back(guarded(*l, [&] { return Polyhedron::from_generators(r, groups[0], groups[1], groups[2]); }));
  }
  slices_.emplace(p, std::make_pair(&head, std::move(cells)));
}

void Parser::parse_bundle(const Line& head) {
  expect_count(head, 1);
  std::vector<Cone> base;
  Twist twist;
  const Line* first = &head;
  for (const Line* l : block(head)) {
    const std::string& w = l->tokens[0].text;
    if (w == "cone") {
      auto gens = vectors(*l, 1);
      base.emplace_back(need_rank(*l), gens);
    } else if (w == "twist") {
      expect_count(*l, 3);
      const Vector ray = vector(*l, 1);
      if (!twist.emplace(ray, integer(*l, 2)).second) fail(*l, 1, "second twist for ray " + to_string(ray));
    } else {
      fail(*l, 0, "expected 'cone' or 'twist', got '" + w + "'");
    }
  }
  if (base.empty()) fail(*first, 0, "bundle block without base cones");
  doc_.bundle = guarded(head, [&] { return BundleSpec{Fan(*rank_, base), twist}; });
}

void Parser::parse_profile(const Line& head) {
  expect_count(head, 1);
  CountProfile p;
  bool have_points = false;
  std::set<std::string> rows;
  for (const Line* l : block(head)) {
    const std::string& w = l->tokens[0].text;
    if (w == "points") {
      expect_count(*l, 2);
      p.num_special_points = natural(*l, 1);
      have_points = true;
    } else if (w == "R" || w == "V" || w == "T") {
      if (!rows.insert(w).second) fail(*l, 0, "row " + w + " given twice");
      for (std::size_t t = 1; t < l->tokens.size(); ++t)
        if (integer(*l, t) < 0) fail(*l, t, "counts must be non-negative");
      (w == "R" ? p.R : w == "V" ? p.V : p.T) = integers(*l, 1);
    } else {
      fail(*l, 0, "expected 'points', 'R', 'V' or 'T', got '" + w + "'");
    }
  }
  if (!have_points || rows.size() != 3) fail(head, 0, "profile needs 'points', 'R', 'V' and 'T'");
  if (p.R.size() < 2 || p.R.size() != p.V.size() || p.R.size() != p.T.size())
    fail(head, 0, "profile rows must have the same length d+2");
  p.d = p.R.size() - 2;
  doc_.profile = p;
}

void Parser::parse_provenance(const Line& head) {
  expect_count(head, 1);
  ProvenanceBlock b;
  for (const Line* l : block(head)) {
    const std::string& w = l->tokens[0].text;
    if (w == "cell") {
      expect_count(*l, 4);
      const PointOnLine p = point(*l, 1);
      b.slices[p].push_back({p, natural(*l, 2), SigmaECone{masks(*l, 3)}});
    } else if (w == "tail" || w == "marked") {
      expect_count(*l, 3);
      (w == "tail" ? b.tail : b.marked).push_back({natural(*l, 1), SigmaECone{masks(*l, 2)}});
    } else {
      fail(*l, 0, "expected 'cell', 'tail' or 'marked', got '" + w + "'");
    }
  }
  doc_.provenance = std::move(b);
}

void Parser::parse_counts(const Line& head) {
  expect_count(head, 3);
  QuotientCounts q;
  q.N = natural(head, 1);
  q.d = natural(head, 2);
  std::set<std::string> seen;
  for (const Line* l : block(head)) {
    const std::string& w = l->tokens[0].text;
    if (w == "slice") {
      if (l->tokens.size() < 2) fail(*l, 0, "'slice' expects a point");
      const PointOnLine p = point(*l, 1);
      if (!q.slices.emplace(p, FVector(integers(*l, 2))).second) fail(*l, 1, "second slice count at " + p.to_string());
    } else if (w == "tail" || w == "marked") {
      if (!seen.insert(w).second) fail(*l, 0, "'" + w + "' given twice");
      (w == "tail" ? q.tail : q.marked) = FVector(integers(*l, 1));
    } else {
      fail(*l, 0, "expected 'slice', 'tail' or 'marked', got '" + w + "'");
    }
  }
  doc_.counts = std::move(q);
}

ComputationDocument Parser::run() {
  if (lines_.empty()) throw ParseError(1, 1, "empty document");
  while (pos_ < lines_.size()) {
    const Line& l = lines_[pos_++];
    const std::string& w = l.tokens[0].text;
    auto once = [&] {
      if (w != "slice" && !seen_.insert(w).second) fail(l, 0, "'" + w + "' given twice");
    };
    if (w == "label") {
      once();
      std::string text;
      for (std::size_t t = 1; t < l.tokens.size(); ++t) text += (t > 1 ? " " : "") + l.tokens[t].text;
      doc_.label = text;
    } else if (w == "rank") {
      once();
      expect_count(l, 2);
      if (rank_) fail(l, 0, "'rank' must come before any vector");
      rank_ = natural(l, 1);
      if (*rank_ == 0) fail(l, 1, "the rank must be positive");
    } else if (w == "N") {
      once();
      expect_count(l, 2);
      doc_.N = natural(l, 1);
      if (*doc_.N == 0) fail(l, 1, "N must be positive");
    } else if (w == "k") {
      once();
      expect_count(l, 2);
      const std::string& s = l.tokens[1].text;
      const auto dots = s.find("..");
      Line part = l;
      if (dots == std::string::npos) {
        const std::size_t k = natural(l, 1);
        doc_.k_range = KRange{k, k};
      } else {
        part.tokens = {l.tokens[0], {s.substr(0, dots), l.tokens[1].column},
                       {s.substr(dots + 2), l.tokens[1].column + dots + 2}};
        doc_.k_range = KRange{natural(part, 1), natural(part, 2)};
        if (doc_.k_range->lo > doc_.k_range->hi) fail(l, 1, "empty k range " + s);
      }
    } else if (w == "strategy") {
      once();
      expect_count(l, 2);
      try {
        doc_.strategy = parse_strategy(l.tokens[1].text);
      } catch (const Error&) {
        fail(l, 1, "unknown strategy '" + l.tokens[1].text + "'; use example-table or textbook");
      }
    } else if (w == "reference") {
      once();
      std::vector<Integer> f = integers(l, 1);
      if (f.empty()) fail(l, 0, "'reference' expects an f-vector");
      doc_.reference = FVector(f);
    } else if (w == "special-points") {
      once();
      for (std::size_t t = 1; t < l.tokens.size(); ++t) special_.insert(point(l, t));
    } else if (w == "tail-fan") {
      once();
      expect_count(l, 1);
      need_rank(l);
      tail_line_ = &l;
      tail_ = cones(l);
    } else if (w == "marked") {
      once();
      expect_count(l, 1);
      need_rank(l);
      marked_ = cones(l);
      has_marked_ = true;
    } else if (w == "slice") {
      need_rank(l);
      parse_slice(l);
    } else if (w == "bundle") {
      once();
      parse_bundle(l);
    } else if (w == "profile") {
      once();
      parse_profile(l);
    } else if (w == "provenance") {
      once();
      parse_provenance(l);
    } else if (w == "counts") {
      once();
      parse_counts(l);
    } else if (w == "end") {
      fail(l, 0, "'end' without an open block");
    } else {
      fail(l, 0, "unknown keyword '" + w + "'");
    }
  }

  if (!tail_ && (!slices_.empty() || has_marked_ || !special_.empty()))
    fail(slices_.empty() ? lines_.front() : *slices_.begin()->second.first, 0, "slices and marked cones need a tail-fan block");
  if (tail_) {
    const std::size_t r = *rank_;
    Fan tail = guarded(*tail_line_, [&] { return Fan(r, *tail_); });
    std::map<PointOnLine, PolyhedralComplex> slices;
    for (const auto& [p, entry] : slices_)
      slices.emplace(p, guarded(*entry.first, [&] { return PolyhedralComplex(r, entry.second); }));
    doc_.variety = guarded(*tail_line_, [&] { return MarkedFansyDivisor(tail, slices, marked_, special_); });
  }
  if (!doc_.variety && !doc_.bundle && !doc_.counts)
    throw ParseError(lines_.front().number, 1, "document describes no variety: give a tail-fan or a bundle block");
  return doc_;
}

std::string join(const std::vector<Integer>& xs) {
  std::string out;
  for (const auto& x : xs) out += " " + x.get_str();
  return out;
}

std::string vectors_line(const std::vector<Vector>& vs) {
  std::string out;
  for (const auto& v : vs) {
    out += " (";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_string(v[i]);
    out += ")";
  }
  return out;
}

std::string masks_text(const SigmaECone& c) {
  std::string out;
  for (std::size_t i = 0; i < c.masks.size(); ++i) out += (i ? "," : "") + std::to_string(c.masks[i]);
  return out;
}

void write_cones(std::ostream& out, const std::vector<Cone>& cones) {
  for (const auto& c : cones) out << "  cone" << vectors_line(c.generators()) << "\n";
}

}  // namespace

ComputationDocument parse_document(const std::string& text) {
  auto lines = tokenize(text);
  const std::size_t last = static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
  return Parser(std::move(lines), last).run();
}

std::string serialize(const ComputationDocument& doc) {
  std::ostringstream out;
  if (!doc.label.empty()) out << "label " << doc.label << "\n";
  std::optional<std::size_t> rank;
  if (doc.variety) rank = doc.variety->rank;
  else if (doc.bundle) rank = doc.bundle->base.ambient_rank();
  if (rank) out << "rank " << *rank << "\n";
  if (doc.N) out << "N " << *doc.N << "\n";
  if (doc.k_range) {
    out << "k " << doc.k_range->lo;
    if (doc.k_range->hi != doc.k_range->lo) out << ".." << doc.k_range->hi;
    out << "\n";
  }
  if (doc.strategy) out << "strategy " << to_string(*doc.strategy) << "\n";
  if (doc.reference) out << "reference" << join(doc.reference->counts()) << "\n";

  if (doc.variety) {
    const MarkedFansyDivisor& X = doc.variety.value();
    out << "\ntail-fan\n";
    write_cones(out, X.tail_fan.maximal_cones());
    out << "end\n";
    std::string extra;
    for (const auto& p : X.special_points)
      if (!X.slices.count(p)) extra += " " + p.to_string();
    if (!extra.empty()) out << "special-points" << extra << "\n";
    for (const auto& [p, s] : X.slices) {
      out << "\nslice " << p.to_string() << "\n";
      for (std::size_t i : s.maximal_cells()) {
        const Polyhedron& c = s.cells()[i];
        out << "  cell vertices" << vectors_line(c.vertices());
        if (!c.rays().empty()) out << " rays" << vectors_line(c.rays());
        if (!c.lines().empty()) out << " lines" << vectors_line(c.lines());
        out << "\n";
      }
      out << "end\n";
    }
    if (!X.marked.empty()) {
      out << "\nmarked\n";
      write_cones(out, X.marked);
      out << "end\n";
    }
  }

  if (doc.bundle) {
    out << "\nbundle\n";
    write_cones(out, doc.bundle->base.maximal_cones());
    for (const auto& [ray, c] : doc.bundle->twist) out << "  twist" << vectors_line({ray}) << " " << c.get_str() << "\n";
    out << "end\n";
  }

  if (doc.profile) {
    const CountProfile& p = doc.profile.value();
    out << "\nprofile\n  points " << p.num_special_points << "\n";
    out << "  R" << join(p.R) << "\n  V" << join(p.V) << "\n  T" << join(p.T) << "\nend\n";
  }

  if (doc.provenance) {
    out << "\nprovenance\n";
    for (const auto& [p, tags] : doc.provenance->slices)
      for (const auto& tag : tags) out << "  cell " << p.to_string() << " " << tag.source_cell << " " << masks_text(tag.sigma) << "\n";
    for (const auto& tag : doc.provenance->tail) out << "  tail " << tag.source_cone << " " << masks_text(tag.sigma) << "\n";
    for (const auto& tag : doc.provenance->marked) out << "  marked " << tag.source_cone << " " << masks_text(tag.sigma) << "\n";
    out << "end\n";
  }

  if (doc.counts) {
    const QuotientCounts& q = doc.counts.value();
    out << "\ncounts " << q.N << " " << q.d << "\n";
    for (const auto& [p, f] : q.slices) out << "  slice " << p.to_string() << join(f.counts()) << "\n";
    out << "  tail" << join(q.tail.counts()) << "\n";
    out << "  marked" << join(q.marked.counts()) << "\nend\n";
  }
  return out.str();
}

MarkedFansyDivisor resolve_variety(const ComputationDocument& doc) {
  if (doc.variety) return *doc.variety;
  if (doc.bundle) return toric_downgrade(projectivized_bundle_fan(doc.bundle->base, doc.bundle->twist));
  throw ValidityError("document describes no variety");
}

FVector reference_fvector(const ComputationDocument& doc, const MarkedFansyDivisor& X) {
  return doc.reference ? *doc.reference : X.tail_fan.f_vector();
}

ComputationDocument quotient_document(const QuotientFansyDivisor& Y, const std::string& label) {
  ComputationDocument doc;
  doc.label = label;
  doc.variety = Y.fansy;
  doc.N = Y.N;
  doc.provenance = ProvenanceBlock{Y.slice_provenance, Y.tail_provenance, Y.marked_provenance};
  return doc;
}

QuotientFansyDivisor quotient_from_document(const ComputationDocument& doc) {
  if (!doc.variety || !doc.N || !doc.provenance) throw ValidityError("not a quotient document: needs N, a variety and provenance");
  const MarkedFansyDivisor& Y = *doc.variety;
  if (Y.rank % *doc.N != 0) throw DimensionError("quotient document: rank is not a multiple of N");
  const ProvenanceBlock& b = *doc.provenance;
  for (const auto& p : Y.special_points) {
    auto it = b.slices.find(p);
    if (it == b.slices.end() || it->second.size() != Y.slice(p).cells().size())
      throw ValidityError("quotient document: provenance for the slice at " + p.to_string() + " does not match its cells");
  }
  if (b.tail.size() != Y.tail_fan.cones().size() || b.marked.size() != Y.marked.size())
    throw ValidityError("quotient document: provenance does not match the tail fan or marked set");
  return QuotientFansyDivisor{*doc.N, Y.rank / *doc.N, Y, b.slices, b.tail, b.marked, {}};
}

ComputationDocument counts_document(const QuotientCounts& q, const std::string& label) {
  ComputationDocument doc;
  doc.label = label;
  doc.counts = q;
  return doc;
}

}  // namespace tvchow
