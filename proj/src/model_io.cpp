#include "blowuplab/model_io.hpp"

#include "blowuplab/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace blowuplab {

using nlohmann::json;

namespace {

struct Position {
  std::size_t line = 0;
  std::size_t column = 0;
};

Position position_of(std::string_view text, std::size_t offset) {
  Position p{1, 1};
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++p.line;
      p.column = 1;
    } else {
      ++p.column;
    }
  }
  return p;
}

[[noreturn]] void fail_at(std::string_view text, std::size_t offset, const std::string &what) {
  const auto p = position_of(text, offset);
  throw ParseError(what, p.line, p.column);
}

/// Rejects number tokens with a fraction or exponent before JSON parsing, so
/// the error points at the literal.
void reject_float_literals(std::string_view text) {
  bool in_string = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_string) {
      if (c == '\\')
        ++i;
      else if (c == '"')
        in_string = false;
      continue;
    }
    if (c == '"') {
      in_string = true;
      continue;
    }
    if (c == '-' || (c >= '0' && c <= '9')) {
      std::size_t j = i;
      while (j < text.size() && (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '.' ||
                                 text[j] == 'e' || text[j] == 'E' || text[j] == '+' || text[j] == '-'))
        ++j;
      const auto token = text.substr(i, j - i);
      if (token.find_first_of(".eE") != std::string_view::npos)
        fail_at(text, i,
                "floating-point literal " + std::string(token) + " not allowed; write exact rationals as \"p/q\"");
      i = j - 1;
    }
  }
}

/// Offsets of the objects inside the array stored under `key`, in order.
std::vector<std::size_t> array_entry_offsets(std::string_view text, std::string_view key) {
  std::vector<std::size_t> out;
  const std::string needle = "\"" + std::string(key) + "\"";
  const auto at = text.find(needle);
  if (at == std::string_view::npos)
    return out;
  const auto open = text.find('[', at);
  if (open == std::string_view::npos)
    return out;
  int depth = 0;
  bool in_string = false;
  for (std::size_t i = open + 1; i < text.size(); ++i) {
    const char c = text[i];
    if (in_string) {
      if (c == '\\')
        ++i;
      else if (c == '"')
        in_string = false;
      continue;
    }
    if (c == '"')
      in_string = true;
    else if (c == '{' || c == '[') {
      if (depth == 0 && c == '{')
        out.push_back(i);
      ++depth;
    } else if (c == '}' || c == ']') {
      if (depth == 0)
        break;
      --depth;
    }
  }
  return out;
}

json parse_json(std::string_view text) {
  reject_float_literals(text);
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error &e) {
    const std::size_t offset = e.byte == 0 ? 0 : e.byte - 1;
    std::string what = e.what();
    // nlohmann prefixes "[json.exception.parse_error.101] parse error at line L, column C: "
    if (auto colon = what.find(": "); colon != std::string::npos)
      what = what.substr(colon + 2);
    fail_at(text, offset, "malformed document: " + what);
  }
}

class DocumentReader {
public:
  DocumentReader(std::string_view text, const json &doc) : text_(text), doc_(doc) {}

  [[noreturn]] void fail(const std::string &what, std::optional<std::size_t> offset = std::nullopt) const {
    if (offset)
      fail_at(text_, *offset, what);
    throw ParseError(what);
  }

  std::optional<std::size_t> key_offset(const std::string &key) const {
    const auto at = text_.find("\"" + key + "\"");
    if (at == std::string_view::npos)
      return std::nullopt;
    return at;
  }

  void require_object() const {
    if (!doc_.is_object())
      fail("document must be a JSON object", 0);
  }

  void check_keys(const json &object, const std::set<std::string> &allowed, const std::string &where,
                  std::optional<std::size_t> offset) const {
    for (const auto &[key, value] : object.items())
      if (!allowed.count(key))
        fail("unknown key \"" + key + "\" in " + where, key_offset(key).value_or(offset.value_or(0)));
  }

  void check_schema() const {
    if (!doc_.contains("schema_version"))
      fail("missing \"schema_version\"", 0);
    const auto &v = doc_["schema_version"];
    if (!v.is_number_integer() || v.get<std::int64_t>() != kSchemaVersion)
      fail("unsupported schema_version (expected " + std::to_string(kSchemaVersion) + ")",
           key_offset("schema_version"));
  }

  int dimension() const {
    if (!doc_.contains("dimension"))
      fail("missing \"dimension\"", 0);
    const auto &v = doc_["dimension"];
    if (!v.is_number_integer() || v.get<std::int64_t>() < 1 || v.get<std::int64_t>() > 32)
      fail("\"dimension\" must be an integer in 1..32", key_offset("dimension"));
    return static_cast<int>(v.get<std::int64_t>());
  }

  int index(const json &entry, const char *key, int n, const std::string &where, std::size_t offset) const {
    if (!entry.contains(key))
      fail(where + ": missing \"" + key + "\"", offset);
    const auto &v = entry[key];
    if (!v.is_number_integer())
      fail(where + ": \"" + key + "\" must be an integer", offset);
    const auto i = v.get<std::int64_t>();
    if (i < 1 || i > n)
      fail(where + ": index " + key + " = " + std::to_string(i) + " out of range 1.." + std::to_string(n), offset);
    return static_cast<int>(i) - 1;
  }

  Rational rational(const json &v, const std::string &where, std::size_t offset) const {
    if (v.is_number_integer())
      return Rational(v.dump());
    if (v.is_string()) {
      try {
        return parse_rational(v.get<std::string>());
      } catch (const ParseError &e) {
        fail(where + ": " + e.what(), offset);
      }
    }
    fail(where + ": value must be an integer or a \"p/q\" string", offset);
  }

  std::string_view text() const { return text_; }

private:
  std::string_view text_;
  const json &doc_;
};

json vector_json(const RationalVector &v) {
  json out = json::array();
  for (const auto &x : v)
    out.push_back(to_string(x));
  return out;
}

json form_json(const PolyForm &form, const std::string &stem) {
  json out = json::array();
  for (const auto &[b, c] : form.terms()) {
    std::string blade;
    for (int i : blade_indices(b)) {
      if (!blade.empty())
        blade += "^";
      blade += "d" + stem + std::to_string(i + 1);
    }
    out.push_back({{"blade", blade.empty() ? "1" : blade}, {"coefficient", c.to_string()}});
  }
  return out;
}

json certificate_json(const OrderCertificate &c) {
  json out{{"chart", c.chart + 1},
           {"order", c.order},
           {"status", to_string(c.status)},
           {"leading_form", c.leading_form.to_string("x~")},
           {"transverse_like", c.transverse_like()}};
  if (!c.certificate.empty())
    out["certificate"] = c.certificate;
  if (c.falsifying_point)
    out["falsifying_point"] = vector_json(*c.falsifying_point);
  return out;
}

json cross_checks_json(const std::vector<CrossCheck> &checks) {
  json out = json::array();
  for (const auto &c : checks)
    out.push_back({{"name", c.name}, {"agreed", c.agreed}, {"detail", c.detail}});
  return out;
}

json metadata_json(const AlgebraMetadata &m) {
  json out = json::object();
  if (m.expected_verdict)
    out["expected_verdict"] = *m.expected_verdict;
  if (m.expected_height)
    out["expected_height"] = *m.expected_height;
  if (!m.source.empty())
    out["source"] = m.source;
  return out;
}

json witness_json(const HeightWitness &w) { return {{"xi", vector_json(w.xi)}, {"height", w.height}}; }

json verdict_json(const LiftVerdict &v) {
  json out{{"variant", to_string(v.kind)}};
  if (v.height)
    out["k"] = *v.height;
  if (v.witnesses)
    out["witnesses"] = json::array({witness_json(v.witnesses->first), witness_json(v.witnesses->second)});
  const auto &c = v.classification;
  json cls{{"family", to_string(c.family)}, {"parameter", c.parameter}};
  if (c.constant_height)
    cls["constant_height"] = *c.constant_height;
  json minors = json::array();
  for (const auto &q : c.killing_minors)
    minors.push_back(to_string(q));
  cls["killing_minors"] = minors;
  cls["witness_samples_used"] = c.witness_samples_used;
  if (c.diagonal) {
    json ideal = json::array();
    for (const auto &h : c.diagonal->ideal_basis)
      ideal.push_back(vector_json(h));
    cls["diagonal_affine"] = {{"generator", vector_json(c.diagonal->generator)}, {"ideal_basis", ideal}};
  }
  out["classification"] = cls;
  json charts = json::array();
  for (const auto &cert : v.charts)
    charts.push_back(certificate_json(cert));
  out["charts"] = charts;
  out["cross_checks"] = cross_checks_json(v.cross_checks);
  return out;
}

json bundle_json(const BundleVerdict &b) {
  json out{{"variant", b.kind ? to_string(*b.kind) : "Undetermined"}};
  if (b.height)
    out["k"] = *b.height;
  if (b.base_witnesses)
    out["base_witnesses"] = {{"f_zero", vector_json(b.base_witnesses->first)},
                             {"f_nonzero", vector_json(b.base_witnesses->second)}};
  json charts = json::array();
  for (const auto &cert : b.charts)
    charts.push_back(certificate_json(cert));
  out["charts"] = charts;
  out["cross_checks"] = cross_checks_json(b.cross_checks);
  return out;
}

json rank_conditions_json(const RankConditionReport &t, bool rows) {
  json out{{"samples", t.rows.size()},
           {"violations", t.violations()},
           {"heights", json(std::vector<int>(t.heights.begin(), t.heights.end()))},
           {"ranks", json(std::vector<int>(t.ranks.begin(), t.ranks.end()))},
           {"constant", t.constant()},
           {"summary", t.summary()}};
  if (rows) {
    json list = json::array();
    for (const auto &r : t.rows)
      list.push_back({{"v", vector_json(r.v)},
                      {"height", r.height},
                      {"type", static_cast<int>(r.type)},
                      {"cartan_class", r.cartan_class},
                      {"orbit_dim", r.orbit_dim},
                      {"radial_in_orbit", r.radial_in_orbit},
                      {"rank_D", r.rank_D},
                      {"ok", r.ok()}});
    out["rows"] = list;
  }
  return out;
}

std::string dump(const json &j) { return j.dump(2) + "\n"; }

std::string join(const std::vector<std::string> &parts, const std::string &sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i)
    out += (i ? sep : "") + parts[i];
  return out;
}

template <class C> std::string set_text(const C &values) {
  std::vector<std::string> parts;
  for (const auto &v : values)
    parts.push_back(std::to_string(v));
  return "{" + join(parts, ", ") + "}";
}

void human_certificates(std::ostringstream &out, const std::vector<OrderCertificate> &charts) {
  for (const auto &c : charts) {
    out << "chart " << c.chart + 1 << ": order " << c.order << ", " << to_string(c.status);
    if (c.transverse_like())
      out << " (transverse-like)";
    out << "\n  leading form: " << c.leading_form.to_string("x~") << "\n";
    if (!c.certificate.empty())
      out << "  certificate: " << c.certificate << "\n";
    if (c.falsifying_point)
      out << "  vanishes at: " << to_string(*c.falsifying_point) << "\n";
  }
}

void human_cross_checks(std::ostringstream &out, const std::vector<CrossCheck> &checks) {
  for (const auto &c : checks)
    out << (c.agreed ? "[ok]   " : "[FAIL] ") << c.name << ": " << c.detail << "\n";
}

} // namespace

// ---------------------------------------------------------------------------

AlgebraDocument parse_algebra(std::string_view text) {
  const json doc = parse_json(text);
  const DocumentReader reader(text, doc);
  reader.require_object();
  reader.check_keys(doc, {"schema_version", "name", "dimension", "brackets", "metadata"}, "document", 0);
  reader.check_schema();
  const int n = reader.dimension();

  std::string name = "unnamed";
  if (doc.contains("name")) {
    if (!doc["name"].is_string())
      reader.fail("\"name\" must be a string", reader.key_offset("name"));
    name = doc["name"].get<std::string>();
  }

  std::vector<BracketEntry> entries;
  if (doc.contains("brackets")) {
    const auto &list = doc["brackets"];
    if (!list.is_array())
      reader.fail("\"brackets\" must be an array", reader.key_offset("brackets"));
    const auto offsets = array_entry_offsets(text, "brackets");
    std::set<std::tuple<int, int, int>> seen;
    for (std::size_t e = 0; e < list.size(); ++e) {
      const std::size_t offset = e < offsets.size() ? offsets[e] : reader.key_offset("brackets").value_or(0);
      const std::string where = "brackets[" + std::to_string(e) + "]";
      const auto &entry = list[e];
      if (!entry.is_object())
        reader.fail(where + " must be an object", offset);
      reader.check_keys(entry, {"i", "j", "k", "value"}, where, offset);
      const int i = reader.index(entry, "i", n, where, offset);
      const int j = reader.index(entry, "j", n, where, offset);
      const int k = reader.index(entry, "k", n, where, offset);
      if (i >= j)
        reader.fail(where + ": entries must have i < j (got i = " + std::to_string(i + 1) +
                        ", j = " + std::to_string(j + 1) + ")",
                    offset);
      if (!entry.contains("value"))
        reader.fail(where + ": missing \"value\"", offset);
      if (!seen.insert({i, j, k}).second)
        reader.fail(where + ": duplicate entry for (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) +
                        ", " + std::to_string(k + 1) + ")",
                    offset);
      const Rational value = reader.rational(entry["value"], where, offset);
      if (!is_zero(value))
        entries.push_back({i, j, k, value});
    }
  }

  AlgebraMetadata metadata;
  if (doc.contains("metadata")) {
    const auto &m = doc["metadata"];
    const auto offset = reader.key_offset("metadata");
    if (!m.is_object())
      reader.fail("\"metadata\" must be an object", offset);
    reader.check_keys(m, {"expected_verdict", "expected_height", "source"}, "metadata", offset);
    if (m.contains("expected_verdict")) {
      static const std::set<std::string> verdicts{"LiftsAsPoisson", "LiftsAsDiracOnly", "DoesNotLift"};
      if (!m["expected_verdict"].is_string() || !verdicts.count(m["expected_verdict"].get<std::string>()))
        reader.fail("metadata.expected_verdict must be LiftsAsPoisson, LiftsAsDiracOnly or DoesNotLift",
                    reader.key_offset("expected_verdict"));
      metadata.expected_verdict = m["expected_verdict"].get<std::string>();
    }
    if (m.contains("expected_height")) {
      if (!m["expected_height"].is_number_integer() || m["expected_height"].get<std::int64_t>() < 0)
        reader.fail("metadata.expected_height must be a nonnegative integer", reader.key_offset("expected_height"));
      metadata.expected_height = static_cast<int>(m["expected_height"].get<std::int64_t>());
    }
    if (m.contains("source")) {
      if (!m["source"].is_string())
        reader.fail("metadata.source must be a string", reader.key_offset("source"));
      metadata.source = m["source"].get<std::string>();
    }
  }

  auto algebra = LieAlgebra::from_brackets(std::move(name), n, entries);
  algebra.validate();
  return {std::move(algebra), std::move(metadata)};
}

std::string serialize_algebra(const LieAlgebra &algebra, const AlgebraMetadata &metadata) {
  json brackets = json::array();
  for (const auto &e : algebra.brackets())
    brackets.push_back({{"i", e.i + 1}, {"j", e.j + 1}, {"k", e.k + 1}, {"value", to_string(e.value)}});
  json doc{{"schema_version", kSchemaVersion},
           {"name", algebra.name()},
           {"dimension", algebra.dimension()},
           {"brackets", brackets}};
  auto meta = metadata_json(metadata);
  if (!meta.empty())
    doc["metadata"] = meta;
  return dump(doc);
}

PolyBivector parse_bivector(std::string_view text) {
  const json doc = parse_json(text);
  const DocumentReader reader(text, doc);
  reader.require_object();
  reader.check_keys(doc, {"schema_version", "dimension", "coefficients"}, "document", 0);
  reader.check_schema();
  const int m = reader.dimension();
  const auto ring = ambient_ring(m);
  PolyBivector pi(m, ring);
  if (!doc.contains("coefficients"))
    return pi;
  const auto &list = doc["coefficients"];
  if (!list.is_array())
    reader.fail("\"coefficients\" must be an array", reader.key_offset("coefficients"));
  const auto offsets = array_entry_offsets(text, "coefficients");
  for (std::size_t e = 0; e < list.size(); ++e) {
    const std::size_t offset = e < offsets.size() ? offsets[e] : 0;
    const std::string where = "coefficients[" + std::to_string(e) + "]";
    const auto &entry = list[e];
    if (!entry.is_object())
      reader.fail(where + " must be an object", offset);
    reader.check_keys(entry, {"i", "j", "value"}, where, offset);
    const int i = reader.index(entry, "i", m, where, offset);
    const int j = reader.index(entry, "j", m, where, offset);
    if (i >= j)
      reader.fail(where + ": entries must have i < j", offset);
    if (!entry.contains("value") || !entry["value"].is_string())
      reader.fail(where + ": \"value\" must be a polynomial string", offset);
    Polynomial value(ring);
    try {
      value = parse_polynomial(entry["value"].get<std::string>(), ring);
    } catch (const ParseError &err) {
      reader.fail(where + ": " + err.what(), offset);
    }
    pi.set(i, j, pi.get(i, j) + value);
  }
  return pi;
}

std::string serialize_bivector(const PolyBivector &pi) {
  json list = json::array();
  for (int i = 0; i < pi.dimension(); ++i)
    for (int j = i + 1; j < pi.dimension(); ++j) {
      const auto c = pi.get(i, j);
      if (!c.is_zero())
        list.push_back({{"i", i + 1}, {"j", j + 1}, {"value", c.to_string()}});
    }
  return dump({{"schema_version", kSchemaVersion}, {"dimension", pi.dimension()}, {"coefficients", list}});
}

// ---------------------------------------------------------------------------

bool AnalysisReport::all_agree() const {
  if (verdict && !verdict->all_agree())
    return false;
  if (bundle && !bundle->all_agree())
    return false;
  if (rank_conditions && rank_conditions->violations() != 0)
    return false;
  return true;
}

std::size_t CrosscheckReport::dictionary_violations() const {
  return static_cast<std::size_t>(
      std::count_if(dictionary.begin(), dictionary.end(), [](const DictionaryRow &r) { return !r.ok(); }));
}

std::string emit_report(const AnalysisReport &r, ReportFormat format) {
  if (format == ReportFormat::Machine) {
    json out{{"command", "analyze"},
             {"algebra", r.algebra},
             {"dimension", r.dimension},
             {"seed", r.seed},
             {"samples", r.samples},
             {"all_agree", r.all_agree()}};
    if (r.metadata)
      out["metadata"] = metadata_json(*r.metadata);
    if (r.verdict)
      out["verdict"] = verdict_json(*r.verdict);
    if (r.spectrum) {
      json counts = json::object();
      for (const auto &[h, n] : r.spectrum->counts)
        counts[std::to_string(h)] = n;
      json reps = json::object();
      for (const auto &[h, xi] : r.spectrum->representatives)
        reps[std::to_string(h)] = vector_json(xi);
      out["height_spectrum"] = {{"samples", r.spectrum->samples}, {"counts", counts}, {"representatives", reps}};
    }
    if (r.rank_conditions)
      out["rank_conditions"] = rank_conditions_json(*r.rank_conditions, false);
    if (r.bundle_f)
      out["f"] = *r.bundle_f;
    if (r.bundle)
      out["bundle"] = bundle_json(*r.bundle);
    return dump(out);
  }

  std::ostringstream out;
  out << "algebra: " << r.algebra << " (dimension " << r.dimension << ")\n";
  out << "seed: " << r.seed << "  samples: " << r.samples << "\n";
  if (r.metadata && r.metadata->expected_verdict)
    out << "expected: " << *r.metadata->expected_verdict << "\n";
  if (r.bundle_f)
    out << "f(y1, y2) = " << *r.bundle_f << "\n";

  if (r.verdict) {
    const auto &v = *r.verdict;
    const auto &c = v.classification;
    out << "\n== classification ==\n";
    out << "family: " << to_string(c.family) << " (parameter " << c.parameter << ")\n";
    if (c.constant_height)
      out << "constant height: " << *c.constant_height << "\n";
    std::vector<std::string> minors;
    for (const auto &q : c.killing_minors)
      minors.push_back(to_string(q));
    out << "Killing leading minors: " << join(minors, ", ") << "\n";
    if (c.diagonal)
      out << "scaling generator: " << to_string(c.diagonal->generator) << "\n";
    if (c.witness_samples_used)
      out << "witness search: " << c.witness_samples_used << " covectors\n";

    out << "\n== verdict ==\n" << to_string(v.kind);
    if (v.height)
      out << " (k=" << *v.height << ")";
    out << "\n";
    if (v.witnesses) {
      out << "witness: height " << v.witnesses->first.height << " at " << to_string(v.witnesses->first.xi) << "\n";
      out << "witness: height " << v.witnesses->second.height << " at " << to_string(v.witnesses->second.xi)
          << "\n";
    }
    out << "\n== spinor vanishing orders ==\n";
    human_certificates(out, v.charts);
    out << "\n== cross-checks ==\n";
    human_cross_checks(out, v.cross_checks);
  }
  if (r.spectrum) {
    out << "\n== height spectrum ==\n";
    for (const auto &[h, n] : r.spectrum->counts)
      out << "height " << h << ": " << n << " of " << r.spectrum->samples << " (e.g. "
          << to_string(r.spectrum->representatives.at(h)) << ")\n";
  }
  if (r.bundle) {
    const auto &b = *r.bundle;
    out << "\n== bundle verdict ==\n" << (b.kind ? to_string(*b.kind) : "Undetermined");
    if (b.height)
      out << " (k=" << *b.height << ")";
    out << "\n";
    if (b.base_witnesses)
      out << "f = 0 at " << to_string(b.base_witnesses->first) << ", f != 0 at "
          << to_string(b.base_witnesses->second) << "\n";
    out << "\n== spinor vanishing orders ==\n";
    human_certificates(out, b.charts);
    out << "\n== cross-checks ==\n";
    human_cross_checks(out, b.cross_checks);
  }
  if (r.rank_conditions) {
    const auto &t = *r.rank_conditions;
    out << "\n== rank conditions on the divisor ==\n";
    out << t.rows.size() << " points, " << t.violations() << " violations, heights " << set_text(t.heights)
        << ", ranks of D " << set_text(t.ranks) << ": " << t.summary() << "\n";
  }
  return out.str();
}

std::string emit_report(const SpinorReport &r, ReportFormat format) {
  if (format == ReportFormat::Machine) {
    json charts = json::array();
    for (std::size_t i = 0; i < r.pullbacks.size(); ++i) {
      auto c = certificate_json(r.certificates[i]);
      c["pullback"] = r.pullbacks[i].form.to_string("x~");
      c["pullback_terms"] = form_json(r.pullbacks[i].form, "x~");
      charts.push_back(c);
    }
    json out{{"command", "spinor"},
             {"algebra", r.algebra},
             {"seed", r.seed},
             {"spinor", r.ambient_spinor.to_string()},
             {"charts", charts}};
    if (r.bundle_f)
      out["f"] = *r.bundle_f;
    return dump(out);
  }
  std::ostringstream out;
  out << "algebra: " << r.algebra << "\n";
  if (r.bundle_f)
    out << "f(y1, y2) = " << *r.bundle_f << "\n";
  out << "spinor: " << r.ambient_spinor.to_string() << "\n";
  for (std::size_t i = 0; i < r.pullbacks.size(); ++i) {
    out << "\n== chart " << r.pullbacks[i].chart + 1 << " ==\n";
    out << "pullback: " << r.pullbacks[i].form.to_string("x~") << "\n";
    human_certificates(out, {r.certificates[i]});
  }
  return out.str();
}

std::string emit_report(const CrosscheckReport &r, ReportFormat format) {
  const auto &t = r.rank_conditions;
  std::set<int> orders;
  for (const auto &d : r.dictionary)
    orders.insert(d.line_order);
  if (format == ReportFormat::Machine) {
    json dict = json::array();
    for (const auto &d : r.dictionary)
      dict.push_back({{"xi", vector_json(d.xi)},
                      {"chart", d.chart + 1},
                      {"line_order", d.line_order},
                      {"height", d.height},
                      {"expected", d.expected},
                      {"ok", d.ok()}});
    return dump({{"command", "crosscheck"},
                 {"algebra", r.algebra},
                 {"seed", r.seed},
                 {"samples", r.samples},
                 {"all_hold", r.all_hold()},
                 {"line_order_dictionary",
                  {{"rows", dict},
                   {"violations", r.dictionary_violations()},
                   {"orders", json(std::vector<int>(orders.begin(), orders.end()))},
                   {"constant", orders.size() == 1}}},
                 {"rank_conditions", rank_conditions_json(t, true)}});
  }
  std::ostringstream out;
  out << "algebra: " << r.algebra << "\nseed: " << r.seed << "  samples: " << r.samples << "\n";
  out << "\n== line order vs dim g - 1 - height ==\n";
  out << "xi | chart | order | height | expected | ok\n";
  for (const auto &d : r.dictionary)
    out << to_string(d.xi) << " | " << d.chart + 1 << " | " << d.line_order << " | " << d.height << " | "
        << d.expected << " | " << (d.ok() ? "ok" : "FAIL") << "\n";
  out << "violations: " << r.dictionary_violations() << ", orders " << set_text(orders)
      << (orders.size() == 1 ? " (constant)" : " (non-constant)") << "\n";
  out << "\n== rank conditions on the divisor ==\n";
  out << "v | height | type | class | orbit | radial | rank D | ok\n";
  for (const auto &row : t.rows)
    out << to_string(row.v) << " | " << row.height << " | " << static_cast<int>(row.type) << " | "
        << row.cartan_class << " | " << row.orbit_dim << " | " << (row.radial_in_orbit ? "yes" : "no") << " | "
        << row.rank_D << " | " << (row.ok() ? "ok" : "FAIL") << "\n";
  out << "violations: " << t.violations() << ", heights " << set_text(t.heights) << ", ranks "
      << set_text(t.ranks) << ": " << t.summary() << "\n";
  return out.str();
}

std::string emit_catalog(const std::vector<CatalogEntry> &entries, ReportFormat format) {
  if (format == ReportFormat::Machine) {
    json list = json::array();
    for (const auto &e : entries) {
      json item{{"name", e.name}, {"dimension", e.dimension}, {"family", e.family}, {"bundle", e.is_bundle}};
      item["metadata"] = metadata_json(e.metadata);
      list.push_back(item);
    }
    return dump({{"command", "catalog"}, {"entries", list}});
  }
  std::ostringstream out;
  for (const auto &e : entries) {
    out << e.name << "  dim " << e.dimension << "  " << e.metadata.expected_verdict.value_or("?");
    if (e.metadata.expected_height)
      out << " (k=" << *e.metadata.expected_height << ")";
    out << "  " << e.metadata.source << "\n";
  }
  return out.str();
}

} // namespace blowuplab
