#include "scs/spec_format.hpp"

#include <fstream>
#include <sstream>

namespace scs {
namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) {
    if (tok[0] == '#') break;
    tokens.push_back(tok);
  }
  return tokens;
}

[[noreturn]] void fail(int line_no, const std::string& what) {
  throw parse_error("line " + std::to_string(line_no) + ": " + what);
}

int parse_pattern(const Spec& spec, const std::string& text, int line_no) {
  Word w;
  try {
    w = Word::parse(spec.alphabet, text);
  } catch (const std::exception& e) {
    fail(line_no, std::string("bad pattern '") + text + "': " + e.what());
  }
  if (w.size() != spec.k)
    fail(line_no, "pattern '" + text + "' has length " + std::to_string(w.size()) +
                      ", expected k=" + std::to_string(spec.k));
  return pattern_index(w);
}

LinearConstraint parse_constraint(const Spec& spec, const std::vector<std::string>& tokens,
                                  int line_no) {
  LinearConstraint c;
  long num_patterns = 1;
  for (int d = 0; d < spec.k; ++d) num_patterns *= spec.alphabet->size();
  c.coeffs = VectorXq::Zero(num_patterns);
  Rational sign = 1;
  size_t i = 1;  // tokens[0] == "constraint"
  bool saw_term = false, saw_relation = false;
  for (; i < tokens.size(); ++i) {
    const std::string& tok = tokens[i];
    if (tok == "<=" || tok == "<" || tok == "=" || tok == "==") {
      if (!saw_term) fail(line_no, "constraint has no left-hand terms");
      c.rel = tok == "<=" ? Relation::LE : tok == "<" ? Relation::LT : Relation::EQ;
      saw_relation = true;
      ++i;
      break;
    }
    if (tok == "+") {
      sign = 1;
      continue;
    }
    if (tok == "-") {
      sign = -1;
      continue;
    }
    Rational coef = 1;
    std::string pattern = tok;
    auto star = tok.find('*');
    if (star != std::string::npos) {
      try {
        coef = parse_rational(tok.substr(0, star));
      } catch (const std::exception& e) {
        fail(line_no, e.what());
      }
      pattern = tok.substr(star + 1);
    }
    c.coeffs[parse_pattern(spec, pattern, line_no)] += sign * coef;
    sign = 1;
    saw_term = true;
  }
  if (!saw_relation) fail(line_no, "constraint is missing a relation (<=, <, =)");
  if (i >= tokens.size()) fail(line_no, "constraint is missing its bound");
  try {
    c.bound = parse_rational(tokens[i]);
  } catch (const std::exception& e) {
    fail(line_no, e.what());
  }
  if (i + 1 < tokens.size()) fail(line_no, "trailing tokens after the bound");
  return c;
}

int parse_int(const std::string& tok, int line_no, const std::string& field) {
  try {
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    fail(line_no, "bad integer for " + field + ": '" + tok + "'");
  }
}

}  // namespace

Spec parse_spec(const std::string& text) {
  Spec spec;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::vector<std::string> tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string& head = tokens[0];
    auto need_args = [&](size_t n) {
      if (tokens.size() != n + 1)
        fail(line_no, "'" + head + "' expects " + std::to_string(n) + " argument(s)");
    };
    if (head == "alphabet") {
      need_args(1);
      const std::string& arg = tokens[1];
      try {
        if (arg.find(',') != std::string::npos) {
          std::vector<std::string> symbols;
          std::istringstream split(arg);
          std::string sym;
          while (std::getline(split, sym, ',')) symbols.push_back(sym);
          spec.alphabet = std::make_shared<const Alphabet>(std::move(symbols));
        } else {
          spec.alphabet = Alphabet::from_chars(arg);
        }
      } catch (const std::exception& e) {
        fail(line_no, std::string("bad alphabet: ") + e.what());
      }
    } else if (head == "k") {
      need_args(1);
      spec.k = parse_int(tokens[1], line_no, "k");
      if (spec.k <= 0) fail(line_no, "k must be positive");
    } else if (head == "constraint") {
      if (!spec.alphabet || spec.k == 0)
        fail(line_no, "alphabet and k must be declared before constraints");
      spec.constraints.push_back(parse_constraint(spec, tokens, line_no));
    } else if (head == "eps") {
      need_args(1);
      try {
        spec.eps = parse_rational(tokens[1]);
      } catch (const std::exception& e) {
        fail(line_no, e.what());
      }
    } else if (head == "m") {
      need_args(1);
      spec.m = parse_int(tokens[1], line_no, "m");
    } else if (head == "p") {
      need_args(1);
      spec.p = parse_int(tokens[1], line_no, "p");
    } else if (head == "q") {
      need_args(1);
      spec.q = parse_int(tokens[1], line_no, "q");
    } else if (head == "mode") {
      need_args(1);
      if (tokens[1] != "block" && tokens[1] != "sliding")
        fail(line_no, "mode must be 'block' or 'sliding'");
      spec.mode = tokens[1];
    } else {
      fail(line_no, "unknown directive '" + head + "'");
    }
  }
  if (!spec.alphabet) throw parse_error("spec declares no alphabet");
  if (spec.k == 0) throw parse_error("spec declares no k");
  return spec;
}

Spec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open spec file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str());
}

}  // namespace scs
