#include "wangtiler/ilp.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace wangtiler {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string cell_name(std::string_view prefix, int row, int col) {
  return std::string(prefix) + '_' + std::to_string(row + 1) + '_' + std::to_string(col + 1);
}

std::string cell_name(std::string_view prefix, int row, int col, int extra) {
  return cell_name(prefix, row, col) + '_' + std::to_string(extra);
}

class Builder {
 public:
  Builder(const ModelSpec& spec) : ts_(spec.tileset), spec_(spec) {
    m_.height = spec.height;
    m_.width = spec.width;
    m_.num_tiles = ts_.size();
    for (int r = 0; r < spec.height; ++r)
      for (int c = 0; c < spec.width; ++c)
        for (TileId k = 0; k < ts_.size(); ++k)
          add_var(cell_name("x", r, c, k), VarKind::kBinary, 0.0, 1.0);
  }

  int add_var(std::string name, VarKind kind, double lo, double hi) {
    m_.variables.push_back(Variable{std::move(name), kind, lo, hi});
    return static_cast<int>(m_.variables.size()) - 1;
  }

  // Appends coef * x[r][c][k] for every tile k whose `side` color satisfies pred.
  template <class Pred>
  void cell_terms(std::vector<Term>& out, double coef, int r, int c, Side side, Pred pred) const {
    for (TileId k = 0; k < ts_.size(); ++k)
      if (pred(ts_[k].color(side))) out.push_back(Term{coef, m_.x_index(r, c, k)});
  }
  void cell_all(std::vector<Term>& out, double coef, int r, int c) const {
    for (TileId k = 0; k < ts_.size(); ++k) out.push_back(Term{coef, m_.x_index(r, c, k)});
  }

  // Merges repeated variables and drops zero coefficients; skips rows that
  // are empty and trivially satisfied.
  void add(std::string name, std::vector<Term> terms, Sense sense, double rhs) {
    std::vector<Term> merged;
    std::unordered_map<int, std::size_t> pos;
    for (const Term& t : terms) {
      auto [it, fresh] = pos.try_emplace(t.var, merged.size());
      if (fresh)
        merged.push_back(t);
      else
        merged[it->second].coef += t.coef;
    }
    std::erase_if(merged, [](const Term& t) { return t.coef == 0.0; });
    if (merged.empty()) {
      const bool holds = (sense == Sense::kEqual && rhs == 0.0) ||
                         (sense == Sense::kLessEqual && rhs >= 0.0) ||
                         (sense == Sense::kGreaterEqual && rhs <= 0.0);
      if (holds) return;
    }
    m_.constraints.push_back(Constraint{std::move(name), std::move(merged), sense, rhs});
  }

  IlpModel take() { return std::move(m_); }

  IlpModel m_;
  const TileSet& ts_;
  const ModelSpec& spec_;
};

void require(bool ok, const std::string& ext, Formulation f) {
  if (!ok)
    throw std::invalid_argument("extension " + ext + " is not available for the " +
                                std::string(formulation_name(f)) + " formulation");
}

// Difference of matching-color counts across a vertical (r, c)-(r+1, c) or
// horizontal (r, c)-(r, c+1) edge.
std::vector<Term> match_diff(const Builder& b, int r, int c, bool vertical, Color l, double sign) {
  std::vector<Term> t;
  if (vertical) {
    b.cell_terms(t, sign, r, c, Side::kSouth, [&](Color x) { return x == l; });
    b.cell_terms(t, -sign, r + 1, c, Side::kNorth, [&](Color x) { return x == l; });
  } else {
    b.cell_terms(t, sign, r, c, Side::kEast, [&](Color x) { return x == l; });
    b.cell_terms(t, -sign, r, c + 1, Side::kWest, [&](Color x) { return x == l; });
  }
  return t;
}

void add_extension(Builder& b, const Extension& ext) {
  const Formulation f = b.spec_.formulation;
  const int h = b.spec_.height;
  const int w = b.spec_.width;
  const int nc = b.ts_.num_colors();
  const int nt = b.ts_.size();
  auto eq = [](Color l) { return [l](Color x) { return x == l; }; };
  auto ne = [](Color l) { return [l](Color x) { return x != l; }; };

  std::visit(
      overloaded{
          [&](const ForceTile& e) {
            b.add(cell_name("ft", e.row, e.col, e.tile), {Term{1, b.m_.x_index(e.row, e.col, e.tile)}},
                  Sense::kEqual, 1);
          },
          [&](const ForbidTile& e) {
            b.add(cell_name("fb", e.row, e.col, e.tile), {Term{1, b.m_.x_index(e.row, e.col, e.tile)}},
                  Sense::kEqual, 0);
          },
          [&](const SameTile& e) {
            for (TileId k = 0; k < nt; ++k)
              b.add(cell_name("st", e.row, e.col, k) + cell_name("", e.other_row, e.other_col),
                    {Term{1, b.m_.x_index(e.row, e.col, k)},
                     Term{-1, b.m_.x_index(e.other_row, e.other_col, k)}},
                    Sense::kEqual, 0);
          },
          [&](const DifferentTile& e) {
            for (TileId k = 0; k < nt; ++k)
              b.add(cell_name("dt", e.row, e.col, k) + cell_name("", e.other_row, e.other_col),
                    {Term{1, b.m_.x_index(e.row, e.col, k)},
                     Term{1, b.m_.x_index(e.other_row, e.other_col, k)}},
                    Sense::kLessEqual, 1);
          },
          [&](const ForceEdgeColor& e) {
            std::vector<Term> t;
            b.cell_terms(t, 1, e.row, e.col, e.side, eq(e.color));
            b.add(cell_name("fc", e.row, e.col) + '_' + std::string(side_name(e.side)) + '_' +
                      std::to_string(e.color),
                  std::move(t), Sense::kEqual, 1);
          },
          [&](const ForbidEdgeColor& e) {
            std::vector<Term> t;
            b.cell_terms(t, 1, e.row, e.col, e.side, eq(e.color));
            b.add(cell_name("fbc", e.row, e.col) + '_' + std::string(side_name(e.side)) + '_' +
                      std::to_string(e.color),
                  std::move(t), Sense::kEqual, 0);
          },
          [&](const EqualEdgeColors& e) {
            for (Color l = 0; l < nc; ++l) {
              std::vector<Term> t;
              b.cell_terms(t, 1, e.row, e.col, e.side, eq(l));
              b.cell_terms(t, -1, e.other_row, e.other_col, e.other_side, eq(l));
              b.add(cell_name("ec", e.row, e.col) + '_' + std::string(side_name(e.side)) +
                        cell_name("", e.other_row, e.other_col) + '_' +
                        std::string(side_name(e.other_side)) + '_' + std::to_string(l),
                    std::move(t), Sense::kEqual, 0);
            }
          },
          [&](const DifferentEdgeColors& e) {
            for (Color l = 0; l < nc; ++l) {
              std::vector<Term> t;
              b.cell_terms(t, 1, e.row, e.col, e.side, eq(l));
              b.cell_terms(t, 1, e.other_row, e.other_col, e.other_side, eq(l));
              b.add(cell_name("dc", e.row, e.col) + '_' + std::string(side_name(e.side)) +
                        cell_name("", e.other_row, e.other_col) + '_' +
                        std::string(side_name(e.other_side)) + '_' + std::to_string(l),
                    std::move(t), Sense::kLessEqual, 1);
            }
          },
          [&](const PeriodicFixed&) {
            require(f == Formulation::kDecision || f == Formulation::kMaxCsp, "periodic", f);
            for (int c = 0; c < w; ++c)
              for (Color l = 0; l < nc; ++l) {
                std::vector<Term> t;
                b.cell_terms(t, 1, 0, c, Side::kNorth, eq(l));
                b.cell_terms(t, -1, h - 1, c, Side::kSouth, eq(l));
                b.add("pn_" + std::to_string(c + 1) + '_' + std::to_string(l), std::move(t),
                      Sense::kEqual, 0);
              }
            for (int r = 0; r < h; ++r)
              for (Color l = 0; l < nc; ++l) {
                std::vector<Term> t;
                b.cell_terms(t, 1, r, 0, Side::kWest, eq(l));
                b.cell_terms(t, -1, r, w - 1, Side::kEast, eq(l));
                b.add("pw_" + std::to_string(r + 1) + '_' + std::to_string(l), std::move(t),
                      Sense::kEqual, 0);
              }
          },
          [&](const PeriodicVariable&) {
            require(f == Formulation::kMaxRect, "periodic-var", f);
            for (int r = 0; r < h; ++r)
              for (int c = 0; c < w; ++c)
                for (Color l = 0; l < nc; ++l) {
                  std::vector<Term> t;
                  b.cell_terms(t, 1, r, c, Side::kEast, ne(l));
                  b.cell_terms(t, 1, r, 0, Side::kWest, eq(l));
                  if (c + 1 < w) b.cell_all(t, -1, r, c + 1);
                  b.add(cell_name("pvh", r, c, l), std::move(t), Sense::kLessEqual, 1);
                }
            for (int r = 0; r < h; ++r)
              for (int c = 0; c < w; ++c)
                for (Color l = 0; l < nc; ++l) {
                  std::vector<Term> t;
                  b.cell_terms(t, 1, r, c, Side::kSouth, ne(l));
                  b.cell_terms(t, 1, 0, c, Side::kNorth, eq(l));
                  if (r + 1 < h) b.cell_all(t, -1, r + 1, c);
                  b.add(cell_name("pvv", r, c, l), std::move(t), Sense::kLessEqual, 1);
                }
          },
          [&](const SmallestObjective&) {
            require(f == Formulation::kMaxRect, "smallest", f);
            b.m_.objective.sense = ObjectiveSense::kMinimize;
          },
          [&](const Packing&) {
            require(f == Formulation::kDecision || f == Formulation::kMaxRect, "packing", f);
            if (nt != h * w)
              throw std::invalid_argument("packing needs exactly h*w = " + std::to_string(h * w) +
                                          " tiles, the set has " + std::to_string(nt));
            for (TileId k = 0; k < nt; ++k) {
              std::vector<Term> t;
              for (int r = 0; r < h; ++r)
                for (int c = 0; c < w; ++c) t.push_back(Term{1, b.m_.x_index(r, c, k)});
              b.add("pk_" + std::to_string(k), std::move(t), Sense::kEqual, 1);
            }
          },
      },
      ext);
}

std::string format_number(double v) {
  if (std::isfinite(v) && v == std::floor(v) && std::fabs(v) < 1e15)
    return std::to_string(static_cast<long long>(v));
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

// Writes " name: terms" with wrapping; continuation lines start with spaces
// and never contain ':'.
class LineWriter {
 public:
  explicit LineWriter(std::ostringstream& out) : out_(out) {}
  void start(const std::string& head) {
    out_ << head;
    len_ = head.size();
  }
  void put(const std::string& token) {
    if (len_ + token.size() + 1 > 78 && len_ > 4) {
      out_ << "\n  ";
      len_ = 2;
    }
    out_ << ' ' << token;
    len_ += token.size() + 1;
  }
  void end() { out_ << '\n'; }

 private:
  std::ostringstream& out_;
  std::size_t len_ = 0;
};

void write_terms(LineWriter& lw, const IlpModel& m, const std::vector<Term>& terms, bool first) {
  for (const Term& t : terms) {
    const std::string& name = m.variables[static_cast<std::size_t>(t.var)].name;
    const double mag = std::fabs(t.coef);
    std::string tok;
    if (!first) tok = t.coef < 0 ? "- " : "+ ";
    else if (t.coef < 0) tok = "-";
    if (mag != 1.0) tok += format_number(mag) + ' ';
    lw.put(tok + name);
    first = false;
  }
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& ch : out) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return out;
}

std::string trim(std::string_view s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string_view::npos) return {};
  const auto b = s.find_last_not_of(" \t\r");
  return std::string(s.substr(a, b - a + 1));
}

[[noreturn]] void parse_error(int line, const std::string& why) {
  throw std::invalid_argument("line " + std::to_string(line) + ": " + why);
}

double parse_number(std::string_view tok, int line) {
  double v = 0;
  if (tok == "inf" || tok == "+inf" || tok == "infinity") return INFINITY;
  if (tok == "-inf" || tok == "-infinity") return -INFINITY;
  const char* first = tok.data();
  if (!tok.empty() && tok[0] == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    parse_error(line, "bad number '" + std::string(tok) + "'");
  return v;
}

bool is_number_start(char ch) {
  return std::isdigit(static_cast<unsigned char>(ch)) || ch == '.';
}

std::vector<std::string> tokenize(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch))) { ++i; continue; }
    if (ch == '+' || ch == '-') { out.emplace_back(1, ch); ++i; continue; }
    if (ch == '<' || ch == '>' || ch == '=') {
      std::string op(1, ch);
      ++i;
      while (i < s.size() && (s[i] == '=' || s[i] == '<' || s[i] == '>')) op += s[i++];
      out.push_back(op);
      continue;
    }
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])) && s[j] != '+' &&
           s[j] != '-' && s[j] != '<' && s[j] != '>' && s[j] != '=') {
      // exponent signs belong to the number
      if ((s[j] == 'e' || s[j] == 'E') && j > i && is_number_start(s[i]) && j + 1 < s.size() &&
          (s[j + 1] == '+' || s[j + 1] == '-'))
        j += 2;
      else
        ++j;
    }
    out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

struct ParsedExpr {
  std::vector<std::pair<double, std::string>> terms;
  double constant = 0.0;
};

// Parses "[+|-] [coef] name ..." from tokens[begin, end).
ParsedExpr parse_expr(const std::vector<std::string>& tok, std::size_t begin, std::size_t end,
                      int line) {
  ParsedExpr e;
  double sign = 1.0;
  double coef = 1.0;
  bool has_coef = false;
  for (std::size_t i = begin; i < end; ++i) {
    const std::string& t = tok[i];
    if (t == "+" || t == "-") {
      if (has_coef) {
        e.constant += sign * coef;
        has_coef = false;
        sign = 1.0;
      }
      if (t == "-") sign = -sign;
    } else if (is_number_start(t[0])) {
      if (has_coef) parse_error(line, "two numbers in a row");
      coef = parse_number(t, line);
      has_coef = true;
    } else {
      e.terms.emplace_back(sign * (has_coef ? coef : 1.0), t);
      has_coef = false;
      sign = 1.0;
    }
  }
  if (has_coef) e.constant += sign * coef;
  return e;
}

Sense parse_sense(const std::string& op, int line) {
  if (op == "<=" || op == "<" || op == "=<") return Sense::kLessEqual;
  if (op == ">=" || op == ">" || op == "=>") return Sense::kGreaterEqual;
  if (op == "=") return Sense::kEqual;
  parse_error(line, "bad operator '" + op + "'");
}

}  // namespace

std::string_view formulation_name(Formulation f) {
  switch (f) {
    case Formulation::kDecision: return "decision";
    case Formulation::kMaxRect: return "maxrect";
    case Formulation::kMaxCover: return "maxcover";
    case Formulation::kMaxCsp: return "maxcsp";
  }
  return "?";
}

Formulation parse_formulation(std::string_view text) {
  std::string t;
  for (char ch : text)
    if (ch != '_' && ch != '-') t += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (t == "decision") return Formulation::kDecision;
  if (t == "maxrect") return Formulation::kMaxRect;
  if (t == "maxcover") return Formulation::kMaxCover;
  if (t == "maxcsp") return Formulation::kMaxCsp;
  throw std::invalid_argument("unknown formulation '" + std::string(text) + "'");
}

const Constraint* IlpModel::find_constraint(std::string_view name) const {
  for (const Constraint& c : constraints)
    if (c.name == name) return &c;
  return nullptr;
}

int IlpModel::find_variable(std::string_view name) const {
  for (std::size_t i = 0; i < variables.size(); ++i)
    if (variables[i].name == name) return static_cast<int>(i);
  return -1;
}

bool IlpModel::same_model(const IlpModel& other) const {
  return variables == other.variables && constraints == other.constraints &&
         objective == other.objective;
}

IlpModel build_model(const ModelSpec& spec) {
  if (spec.height < 1 || spec.width < 1)
    throw std::invalid_argument("grid dimensions must be at least 1x1");
  if (spec.tileset.empty()) throw std::invalid_argument("tile set is empty");
  for (const Extension& e : spec.extensions) check_extension(e, spec.tileset, spec.height, spec.width);

  Builder b(spec);
  const int h = spec.height;
  const int w = spec.width;
  const int nc = spec.tileset.num_colors();
  const Formulation f = spec.formulation;

  auto all_cells_objective = [&](ObjectiveSense sense) {
    b.m_.objective.sense = sense;
    for (int i = 0; i < static_cast<int>(b.m_.variables.size()); ++i)
      b.m_.objective.terms.push_back(Term{1, i});
  };

  switch (f) {
    case Formulation::kDecision: {
      for (int r = 0; r + 1 < h; ++r)
        for (int c = 0; c < w; ++c)
          for (Color l = 0; l < nc; ++l)
            b.add(cell_name("v", r, c, l), match_diff(b, r, c, true, l, 1), Sense::kEqual, 0);
      for (int r = 0; r < h; ++r)
        for (int c = 0; c + 1 < w; ++c)
          for (Color l = 0; l < nc; ++l)
            b.add(cell_name("h", r, c, l), match_diff(b, r, c, false, l, 1), Sense::kEqual, 0);
      // Boundary rows and columns, each cell once.
      for (int r = 0; r < h; ++r)
        for (int c = 0; c < w; ++c) {
          if (r != 0 && r != h - 1 && c != 0 && c != w - 1) continue;
          std::vector<Term> t;
          b.cell_all(t, 1, r, c);
          b.add(cell_name("occ", r, c), std::move(t), Sense::kEqual, 1);
        }
      b.m_.objective.sense = ObjectiveSense::kMinimize;
      break;
    }
    case Formulation::kMaxRect: {
      for (int r = 0; r + 1 < h; ++r)
        for (int c = 0; c < w; ++c)
          for (Color l = 0; l < nc; ++l)
            b.add(cell_name("v", r, c, l), match_diff(b, r, c, true, l, 1), Sense::kGreaterEqual, 0);
      for (int r = 0; r < h; ++r)
        for (int c = 0; c + 1 < w; ++c)
          for (Color l = 0; l < nc; ++l)
            b.add(cell_name("h", r, c, l), match_diff(b, r, c, false, l, 1), Sense::kGreaterEqual, 0);
      for (int r = 0; r + 1 < h; ++r)
        for (int c = 0; c + 1 < w; ++c) {
          std::vector<Term> t;
          b.cell_all(t, 1, r + 1, c);
          b.cell_all(t, 1, r, c + 1);
          b.cell_all(t, -1, r + 1, c + 1);
          b.add(cell_name("rect", r, c), std::move(t), Sense::kLessEqual, 1);
        }
      for (int r = 0; r < h; ++r)
        for (int c = 0; c < w; ++c) {
          std::vector<Term> t;
          b.cell_all(t, 1, r, c);
          const bool anchor = r == 0 && c == 0;
          b.add(cell_name("occ", r, c), std::move(t), anchor ? Sense::kEqual : Sense::kLessEqual, 1);
        }
      all_cells_objective(ObjectiveSense::kMaximize);
      break;
    }
    case Formulation::kMaxCover: {
      for (int r = 0; r < h; ++r)
        for (int c = 0; c + 1 < w; ++c)
          for (Color l = 0; l < nc; ++l) {
            std::vector<Term> t;
            b.cell_terms(t, 1, r, c, Side::kEast, [&](Color x) { return x == l; });
            b.cell_terms(t, 1, r, c + 1, Side::kWest, [&](Color x) { return x != l; });
            b.add(cell_name("h", r, c, l), std::move(t), Sense::kLessEqual, 1);
          }
      for (int r = 0; r + 1 < h; ++r)
        for (int c = 0; c < w; ++c)
          for (Color l = 0; l < nc; ++l) {
            std::vector<Term> t;
            b.cell_terms(t, 1, r, c, Side::kSouth, [&](Color x) { return x == l; });
            b.cell_terms(t, 1, r + 1, c, Side::kNorth, [&](Color x) { return x != l; });
            b.add(cell_name("v", r, c, l), std::move(t), Sense::kLessEqual, 1);
          }
      for (int r = 0; r < h; ++r)
        for (int c = 0; c < w; ++c) {
          std::vector<Term> t;
          b.cell_all(t, 1, r, c);
          b.add(cell_name("occ", r, c), std::move(t), Sense::kLessEqual, 1);
        }
      all_cells_objective(ObjectiveSense::kMaximize);
      break;
    }
    case Formulation::kMaxCsp: {
      // hv: horizontal neighbours (i, j)-(i, j+1); hh: vertical (i, j)-(i+1, j).
      std::vector<int> hv, hh;
      for (int r = 0; r < h; ++r)
        for (int c = 0; c + 1 < w; ++c)
          hv.push_back(b.add_var(cell_name("hv", r, c), VarKind::kContinuous, 0.0, 1.0));
      for (int r = 0; r + 1 < h; ++r)
        for (int c = 0; c < w; ++c)
          hh.push_back(b.add_var(cell_name("hh", r, c), VarKind::kContinuous, 0.0, 1.0));
      for (int r = 0; r + 1 < h; ++r)
        for (int c = 0; c < w; ++c) {
          const int slack = hh[static_cast<std::size_t>(r * w + c)];
          for (Color l = 0; l < nc; ++l) {
            auto plus = match_diff(b, r, c, true, l, 1);
            plus.push_back(Term{-1, slack});
            b.add(cell_name("vp", r, c, l), std::move(plus), Sense::kLessEqual, 0);
            auto minus = match_diff(b, r, c, true, l, -1);
            minus.push_back(Term{-1, slack});
            b.add(cell_name("vm", r, c, l), std::move(minus), Sense::kLessEqual, 0);
          }
        }
      for (int r = 0; r < h; ++r)
        for (int c = 0; c + 1 < w; ++c) {
          const int slack = hv[static_cast<std::size_t>(r * (w - 1) + c)];
          for (Color l = 0; l < nc; ++l) {
            auto plus = match_diff(b, r, c, false, l, 1);
            plus.push_back(Term{-1, slack});
            b.add(cell_name("hp", r, c, l), std::move(plus), Sense::kLessEqual, 0);
            auto minus = match_diff(b, r, c, false, l, -1);
            minus.push_back(Term{-1, slack});
            b.add(cell_name("hm", r, c, l), std::move(minus), Sense::kLessEqual, 0);
          }
        }
      for (int r = 0; r < h; ++r)
        for (int c = 0; c < w; ++c) {
          std::vector<Term> t;
          b.cell_all(t, 1, r, c);
          b.add(cell_name("occ", r, c), std::move(t), Sense::kEqual, 1);
        }
      auto& obj = b.m_.objective;
      obj.sense = ObjectiveSense::kMaximize;
      obj.constant = static_cast<double>(hv.size() + hh.size());
      for (int v : hv) obj.terms.push_back(Term{-1, v});
      for (int v : hh) obj.terms.push_back(Term{-1, v});
      break;
    }
  }

  for (const Extension& e : spec.extensions) add_extension(b, e);
  return b.take();
}

std::string emit_lp(const IlpModel& m) {
  std::ostringstream out;
  LineWriter lw(out);
  const Objective& obj = m.objective;
  out << (obj.sense == ObjectiveSense::kMaximize ? "Maximize\n" : "Minimize\n");
  lw.start(" obj:");
  bool first = true;
  if (obj.constant != 0.0 || obj.terms.empty() || obj.sense == ObjectiveSense::kNone) {
    lw.put(format_number(obj.constant));
    first = false;
  }
  if (obj.sense != ObjectiveSense::kNone) write_terms(lw, m, obj.terms, first);
  lw.end();

  out << "Subject To\n";
  for (const Constraint& c : m.constraints) {
    lw.start(" " + c.name + ":");
    if (c.terms.empty())
      lw.put("0 " + m.variables.front().name);
    else
      write_terms(lw, m, c.terms, true);
    const char* op = c.sense == Sense::kLessEqual ? "<=" : c.sense == Sense::kEqual ? "=" : ">=";
    lw.put(op);
    lw.put(format_number(c.rhs));
    lw.end();
  }

  bool any_bounds = false;
  for (const Variable& v : m.variables) {
    if (v.kind == VarKind::kBinary) continue;
    if (!any_bounds) out << "Bounds\n";
    any_bounds = true;
    out << ' ' << format_number(v.lower) << " <= " << v.name << " <= " << format_number(v.upper)
        << '\n';
  }
  bool any_bin = false;
  for (const Variable& v : m.variables) {
    if (v.kind != VarKind::kBinary) continue;
    if (!any_bin) {
      out << "Binaries\n";
      lw.start("");
    }
    any_bin = true;
    lw.put(v.name);
  }
  if (any_bin) lw.end();
  out << "End\n";
  return out.str();
}

IlpModel parse_lp(std::string_view text) {
  enum class Section { kNone, kObjective, kConstraints, kBounds, kBinaries, kGenerals, kEnd };
  Section section = Section::kNone;
  IlpModel m;

  struct RawConstraint {
    std::string name;
    std::string body;
    int line;
  };
  std::vector<RawConstraint> raw;
  std::string objective_body;
  int objective_line = 0;
  std::vector<std::string> binaries;
  struct Bound {
    std::string name;
    double lo, hi;
  };
  std::vector<Bound> bounds;

  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto bs = line.find('\\');
    if (bs != std::string::npos) line.erase(bs);
    const std::string t = trim(line);
    if (t.empty()) continue;
    const std::string key = lower(t);
    if (key == "maximize" || key == "maximum" || key == "max") {
      section = Section::kObjective;
      m.objective.sense = ObjectiveSense::kMaximize;
      objective_line = lineno;
      continue;
    }
    if (key == "minimize" || key == "minimum" || key == "min") {
      section = Section::kObjective;
      m.objective.sense = ObjectiveSense::kMinimize;
      objective_line = lineno;
      continue;
    }
    if (key == "subject to" || key == "such that" || key == "st" || key == "s.t.") {
      section = Section::kConstraints;
      continue;
    }
    if (key == "bounds" || key == "bound") { section = Section::kBounds; continue; }
    if (key == "binaries" || key == "binary" || key == "bin") { section = Section::kBinaries; continue; }
    if (key == "generals" || key == "general" || key == "gen") { section = Section::kGenerals; continue; }
    if (key == "end") { section = Section::kEnd; continue; }

    switch (section) {
      case Section::kObjective: {
        const auto colon = t.find(':');
        objective_body += ' ' + (colon == std::string::npos ? t : t.substr(colon + 1));
        break;
      }
      case Section::kConstraints: {
        const auto colon = t.find(':');
        if (colon != std::string::npos) {
          raw.push_back(RawConstraint{trim(t.substr(0, colon)), t.substr(colon + 1), lineno});
        } else {
          if (raw.empty()) parse_error(lineno, "constraint without a name");
          raw.back().body += ' ' + t;
        }
        break;
      }
      case Section::kBounds: {
        const auto tok = tokenize(t);
        // lo <= x <= hi
        if (tok.size() >= 5 && tok[1] == "<=" && tok[3] == "<=") {
          bounds.push_back(Bound{tok[2], parse_number(tok[0], lineno), parse_number(tok[4], lineno)});
        } else if (tok.size() >= 6 && tok[0] == "-" && tok[2] == "<=" && tok[4] == "<=") {
          bounds.push_back(Bound{tok[3], -parse_number(tok[1], lineno), parse_number(tok[5], lineno)});
        } else {
          parse_error(lineno, "unsupported bound '" + t + "'");
        }
        break;
      }
      case Section::kBinaries: {
        std::istringstream names(t);
        std::string name;
        while (names >> name) binaries.push_back(name);
        break;
      }
      case Section::kGenerals:
        parse_error(lineno, "general integer variables are not supported");
      case Section::kEnd:
        parse_error(lineno, "text after End");
      case Section::kNone:
        parse_error(lineno, "expected an objective section");
    }
  }
  if (section != Section::kEnd) parse_error(lineno, "missing End");

  std::unordered_map<std::string, int> index;
  auto declare = [&](const std::string& name, VarKind kind, double lo, double hi) {
    auto [it, fresh] = index.try_emplace(name, static_cast<int>(m.variables.size()));
    if (fresh) m.variables.push_back(Variable{name, kind, lo, hi});
    return it->second;
  };
  for (const auto& name : binaries) declare(name, VarKind::kBinary, 0, 1);
  for (const auto& bd : bounds) {
    const int v = declare(bd.name, VarKind::kContinuous, bd.lo, bd.hi);
    m.variables[static_cast<std::size_t>(v)].lower = bd.lo;
    m.variables[static_cast<std::size_t>(v)].upper = bd.hi;
  }
  auto lookup = [&](const std::string& name) {
    auto it = index.find(name);
    // Undeclared variables default to continuous in [0, inf).
    return it != index.end() ? it->second : declare(name, VarKind::kContinuous, 0, INFINITY);
  };

  {
    const auto tok = tokenize(objective_body);
    const ParsedExpr e = parse_expr(tok, 0, tok.size(), objective_line);
    m.objective.constant = e.constant;
    for (const auto& [coef, name] : e.terms) m.objective.terms.push_back(Term{coef, lookup(name)});
  }

  for (const RawConstraint& rc : raw) {
    const auto tok = tokenize(rc.body);
    std::size_t op = tok.size();
    for (std::size_t i = 0; i < tok.size(); ++i)
      if (tok[i][0] == '<' || tok[i][0] == '>' || tok[i][0] == '=') { op = i; break; }
    if (op == tok.size()) parse_error(rc.line, "constraint '" + rc.name + "' lacks an operator");
    const ParsedExpr lhs = parse_expr(tok, 0, op, rc.line);
    const ParsedExpr rhs = parse_expr(tok, op + 1, tok.size(), rc.line);
    if (!rhs.terms.empty()) parse_error(rc.line, "variables on the right-hand side");
    Constraint c;
    c.name = rc.name;
    c.sense = parse_sense(tok[op], rc.line);
    c.rhs = rhs.constant - lhs.constant;
    for (const auto& [coef, name] : lhs.terms)
      if (coef != 0.0) c.terms.push_back(Term{coef, lookup(name)});
    m.constraints.push_back(std::move(c));
  }
  return m;
}

Evaluation evaluate_assignment(const IlpModel& m, const Tiling& t) {
  if (t.height() != m.height || t.width() != m.width)
    throw std::invalid_argument("tiling is " + std::to_string(t.height()) + "x" +
                                std::to_string(t.width()) + " but the model is " +
                                std::to_string(m.height) + "x" + std::to_string(m.width));
  std::vector<double> value(m.variables.size(), 0.0);
  for (int r = 0; r < t.height(); ++r)
    for (int c = 0; c < t.width(); ++c)
      if (const Cell& cell = t.at(r, c)) {
        if (*cell < 0 || *cell >= m.num_tiles)
          throw std::invalid_argument("tile id " + std::to_string(*cell) + " outside the model");
        value[static_cast<std::size_t>(m.x_index(r, c, *cell))] = 1.0;
      }

  std::vector<char> continuous(m.variables.size(), 0);
  for (std::size_t i = 0; i < m.variables.size(); ++i)
    if (m.variables[i].kind == VarKind::kContinuous) {
      continuous[i] = 1;
      value[i] = m.variables[i].lower;
    }

  // Raise each continuous variable to the least value its rows demand.
  // Rows with a single continuous term only; that covers every slack we emit.
  for (const Constraint& c : m.constraints) {
    const Term* slack = nullptr;
    double rest = 0.0;
    int n_cont = 0;
    for (const Term& term : c.terms) {
      if (continuous[static_cast<std::size_t>(term.var)]) {
        slack = &term;
        ++n_cont;
      } else {
        rest += term.coef * value[static_cast<std::size_t>(term.var)];
      }
    }
    if (n_cont != 1) continue;
    const double need = (c.rhs - rest) / slack->coef;
    const bool lower_bound = c.sense == Sense::kEqual ||
                             (c.sense == Sense::kLessEqual && slack->coef < 0) ||
                             (c.sense == Sense::kGreaterEqual && slack->coef > 0);
    if (!lower_bound) continue;
    const auto v = static_cast<std::size_t>(slack->var);
    value[v] = std::min(std::max(value[v], need), m.variables[v].upper);
  }

  Evaluation ev;
  constexpr double kTol = 1e-9;
  for (const Constraint& c : m.constraints) {
    double lhs = 0.0;
    for (const Term& term : c.terms) lhs += term.coef * value[static_cast<std::size_t>(term.var)];
    const bool ok = c.sense == Sense::kLessEqual   ? lhs <= c.rhs + kTol
                    : c.sense == Sense::kEqual     ? std::fabs(lhs - c.rhs) <= kTol
                                                   : lhs >= c.rhs - kTol;
    if (!ok) ev.violated.push_back(c.name);
  }
  ev.feasible = ev.violated.empty();
  ev.objective = m.objective.constant;
  for (const Term& term : m.objective.terms)
    ev.objective += term.coef * value[static_cast<std::size_t>(term.var)];
  return ev;
}

}  // namespace wangtiler
