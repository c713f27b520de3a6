#include "smtkit/involutions.hpp"

#include "smtkit/quadlat.hpp"

#include <json.hpp>

#include <cctype>
#include <regex>
#include <stdexcept>

namespace smtkit {

namespace detail {
extern const char* const kInvolutionCatalog;
}

std::string to_string(Isogeny i) {
  switch (i) {
    case Isogeny::SC: return "SC";
    case Isogeny::ADJ: return "ADJ";
    case Isogeny::SC_ADJ: return "SC=ADJ";
  }
  return "?";
}

Isogeny parse_isogeny(std::string_view t) {
  if (t == "SC") return Isogeny::SC;
  if (t == "ADJ") return Isogeny::ADJ;
  if (t == "SC=ADJ") return Isogeny::SC_ADJ;
  throw std::invalid_argument("unknown isogeny type: " + std::string(t));
}

// ---------------------------------------------------------------- expressions

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view s, const std::map<std::string, int>& vars) : s_(s), vars_(vars) {}

  long long run() {
    long long v = parse_or();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("expression '" + std::string(s_) + "': " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(std::string_view tok) {
    skip();
    if (s_.substr(pos_, tok.size()) != tok) return false;
    pos_ += tok.size();
    return true;
  }

  long long parse_or() {
    long long v = parse_and();
    while (eat("||")) {
      long long r = parse_and();
      v = (v || r) ? 1 : 0;
    }
    return v;
  }
  long long parse_and() {
    long long v = parse_cmp();
    while (eat("&&")) {
      long long r = parse_cmp();
      v = (v && r) ? 1 : 0;
    }
    return v;
  }
  long long parse_cmp() {
    long long v = parse_add();
    // two-character operators first
    if (eat("==")) return v == parse_add();
    if (eat("!=")) return v != parse_add();
    if (eat("<=")) return v <= parse_add();
    if (eat(">=")) return v >= parse_add();
    if (eat("<")) return v < parse_add();
    if (eat(">")) return v > parse_add();
    return v;
  }
  long long parse_add() {
    long long v = parse_mul();
    while (true) {
      if (eat("+")) v += parse_mul();
      else if (eat("-")) v -= parse_mul();
      else return v;
    }
  }
  long long parse_mul() {
    long long v = parse_unary();
    while (true) {
      char op = 0;
      if (eat("*")) op = '*';
      else if (eat("/")) op = '/';
      else if (eat("%")) op = '%';
      else return v;
      long long r = parse_unary();
      if (op == '*') {
        v *= r;
      } else {
        if (r == 0) fail("division by zero");
        v = op == '/' ? v / r : v % r;
      }
    }
  }
  long long parse_unary() {
    if (eat("-")) return -parse_unary();
    if (eat("!")) return parse_unary() == 0;
    return parse_atom();
  }
  long long parse_atom() {
    skip();
    if (eat("(")) {
      long long v = parse_or();
      if (!eat(")")) fail("missing )");
      return v;
    }
    if (pos_ >= s_.size()) fail("unexpected end");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long long v = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) v = v * 10 + (s_[pos_++] - '0');
      return v;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        name += s_[pos_++];
      auto it = vars_.find(name);
      if (it == vars_.end()) fail("unknown variable " + name);
      return it->second;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  const std::map<std::string, int>& vars_;
  std::size_t pos_ = 0;
};

// "grassmannian-sl{n}-{k}" -> regex and variable names in order
std::pair<std::regex, std::vector<std::string>> compile_pattern(const std::string& pattern) {
  static const std::regex var(R"(\{([a-z]+)\})");
  std::string rx;
  std::vector<std::string> names;
  std::size_t last = 0;
  for (auto it = std::sregex_iterator(pattern.begin(), pattern.end(), var); it != std::sregex_iterator(); ++it) {
    for (std::size_t k = last; k < static_cast<std::size_t>(it->position()); ++k) {
      char c = pattern[k];
      if (!std::isalnum(static_cast<unsigned char>(c))) rx += '\\';
      rx += c;
    }
    rx += "([0-9]+)";
    names.push_back((*it)[1]);
    last = it->position() + it->length();
  }
  for (std::size_t k = last; k < pattern.size(); ++k) {
    if (!std::isalnum(static_cast<unsigned char>(pattern[k]))) rx += '\\';
    rx += pattern[k];
  }
  return {std::regex(rx), names};
}

std::string render(const std::string& pattern, const std::map<std::string, int>& params) {
  std::string out = pattern;
  for (const auto& [k, v] : params) {
    const std::string key = "{" + k + "}";
    for (auto p = out.find(key); p != std::string::npos; p = out.find(key)) out.replace(p, key.size(), std::to_string(v));
  }
  return out;
}

}  // namespace

long long evaluate_expression(std::string_view expr, const std::map<std::string, int>& vars) {
  return ExprParser(expr, vars).run();
}

// ---------------------------------------------------------------- catalog

InvolutionCatalog InvolutionCatalog::parse(std::string_view text) {
  using nlohmann::json;
  json j = json::parse(text);
  InvolutionCatalog cat;
  for (const auto& f : j.at("families")) {
    Row row;
    row.pattern = f.at("pattern").get<std::string>();
    row.requires_expr = f.value("requires", std::string("1"));
    row.ambient = f.value("ambient", std::string());
    row.fixed_algebra = f.value("fixed_algebra", std::string());
    if (f.contains("model")) {
      const auto& m = f.at("model");
      row.model_kind = m.at("kind").get<std::string>();
      if (row.model_kind == "flip") {
        row.model_family = m.at("factor").at("family").get<std::string>();
        row.model_param = m.at("factor").at("rank").get<std::string>();
      } else if (row.model_kind == "symmetric_quadrics") {
        row.model_param = m.at("n").get<std::string>();
      } else {
        throw std::invalid_argument("catalog: unknown model kind " + row.model_kind);
      }
    }
    for (const auto& c : f.at("cases"))
      row.cases.push_back({c.at("when").get<std::string>(), c.at("restricted").at("family").get<std::string>(),
                           c.at("restricted").at("rank").get<std::string>(), c.at("isogeny").get<std::string>()});
    if (row.cases.empty()) throw std::invalid_argument("catalog: row without cases: " + row.pattern);
    compile_pattern(row.pattern);  // validates the pattern early
    cat.rows_.push_back(std::move(row));
  }
  return cat;
}

const InvolutionCatalog& InvolutionCatalog::builtin() {
  static const InvolutionCatalog cat = parse(detail::kInvolutionCatalog);
  return cat;
}

std::optional<InvolutionRecord> InvolutionCatalog::instantiate(const Row& row, std::map<std::string, int> params) const {
  if (!evaluate_expression(row.requires_expr, params)) return std::nullopt;
  InvolutionRecord rec;
  rec.name = render(row.pattern, params);
  rec.pattern = row.pattern;
  rec.ambient = row.ambient;
  rec.fixed_algebra = row.fixed_algebra;
  rec.params = params;
  bool first = true;
  for (const auto& c : row.cases) {
    if (!evaluate_expression(c.when, params)) continue;
    RestrictedForm f{FinTypeLabel{FinTypeLabel::parse_family(c.family),
                                  static_cast<int>(evaluate_expression(c.rank, params))},
                     parse_isogeny(c.isogeny)};
    if (!is_valid(f.type)) throw std::logic_error("catalog: invalid restricted type " + f.type.name() + " in " + rec.name);
    if (first) rec.restricted = f;
    else rec.alternatives.push_back(f);
    first = false;
  }
  if (first) throw std::logic_error("catalog: no case applies to " + rec.name);
  if (row.model_kind == "flip") {
    rec.kind = InvolutionKind::Flip;
    rec.flip_factor = FinTypeLabel{FinTypeLabel::parse_family(row.model_family),
                                   static_cast<int>(evaluate_expression(row.model_param, params))};
  } else if (row.model_kind == "symmetric_quadrics") {
    rec.kind = InvolutionKind::SymmetricQuadrics;
    rec.quadrics_n = static_cast<int>(evaluate_expression(row.model_param, params));
  }
  return rec;
}

InvolutionRecord InvolutionCatalog::lookup(std::string_view name) const {
  const std::string s(name);
  for (const auto& row : rows_) {
    auto [rx, names] = compile_pattern(row.pattern);
    std::smatch m;
    if (!std::regex_match(s, m, rx)) continue;
    std::map<std::string, int> params;
    for (std::size_t k = 0; k < names.size(); ++k) {
      const std::string digits = m[k + 1];
      if (digits.size() > 6) throw std::invalid_argument("parameter too large in " + s);
      params[names[k]] = std::stoi(digits);
    }
    auto rec = instantiate(row, params);
    if (!rec) throw std::invalid_argument("parameters outside the range of " + row.pattern + ": " + s);
    return *rec;
  }
  throw std::invalid_argument("unknown involution: " + s);
}

std::vector<InvolutionRecord> InvolutionCatalog::instances(int max_param) const {
  std::vector<InvolutionRecord> out;
  for (const auto& row : rows_) {
    auto names = compile_pattern(row.pattern).second;
    std::map<std::string, int> params;
    auto rec = [&](auto&& self, std::size_t k) -> void {
      if (k == names.size()) {
        if (auto r = instantiate(row, params)) out.push_back(std::move(*r));
        return;
      }
      for (int v = 1; v <= max_param; ++v) {
        params[names[k]] = v;
        self(self, k + 1);
      }
    };
    rec(rec, 0);
  }
  return out;
}

// ---------------------------------------------------------------- ambient dictionary

AmbientModel ambient_model(const InvolutionRecord& rec) {
  if (!rec.kind) throw std::invalid_argument("no ambient model for " + rec.name);
  if (*rec.kind == InvolutionKind::Flip) return AmbientModel::flip(*rec.flip_factor);
  return AmbientModel::symmetric_quadrics(rec.quadrics_n);
}

std::vector<WeightVec> weight_map(const InvolutionRecord& rec) {
  AmbientModel m = ambient_model(rec);
  std::vector<WeightVec> out;
  for (int i = 1; i <= m.rank(); ++i) out.push_back(m.eps_image(i));
  return out;
}

WeightVec restricted_to_ambient(const InvolutionRecord& rec, std::span<const Rational> a) {
  auto images = weight_map(rec);
  if (a.size() != images.size()) throw std::invalid_argument("restricted_to_ambient: expected " +
                                                             std::to_string(images.size()) + " coefficients");
  WeightVec w = WeightVec::zero(images.front().basis, images.front().size());
  for (std::size_t i = 0; i < a.size(); ++i) w += a[i] * images[i];
  return w;
}

bool quadratic_verdict(const RestrictedForm& f) {
  if (f.type.rank > 5) throw std::invalid_argument("quadratic_verdict: rank <= 5 only");
  SubLattice L = f.isogeny == Isogeny::ADJ ? root_lattice(f.type) : weight_lattice(f.type);
  return is_quadratic(L, 6 * f.type.rank).quadratic;
}

bool quadratic_rule(const RestrictedForm& f) {
  const Family fam = f.type.family;
  const bool sc = f.isogeny != Isogeny::ADJ;
  const bool adj = f.isogeny != Isogeny::SC;
  return (sc && (fam == Family::A || fam == Family::BC || fam == Family::C)) || (adj && fam == Family::B);
}

}  // namespace smtkit
