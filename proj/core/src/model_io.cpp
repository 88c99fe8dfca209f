#include "tsmv/model_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "tsmv/errors.hpp"

namespace tsmv {

namespace {

std::string format_double(double d) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, d);
  if (ec != std::errc{}) throw Error("format_double failed");
  return std::string(buf, end);
}

[[noreturn]] void fail(size_t line_no, const std::string& what) {
  throw ParseError("model text, line " + std::to_string(line_no) + ": " + what);
}

void append_monomial(std::string& out, const Monomial& mo) {
  if (mo.empty()) {
    out += "{}";
    return;
  }
  bool first = true;
  for (const Literal& l : mo.literals()) {
    if (!first) out += ',';
    first = false;
    if (l.negated) out += '~';
    out += std::to_string(l.var_index);
  }
}

Monomial parse_monomial(const std::string& body, int n_vars, size_t line_no) {
  Monomial mo;
  if (body == "{}") return mo;
  if (body.empty()) fail(line_no, "missing literal list (use {} for an empty monomial)");
  size_t pos = 0;
  while (pos <= body.size()) {
    size_t comma = body.find(',', pos);
    std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos
                                                                  : comma - pos);
    bool negated = false;
    if (!tok.empty() && tok.front() == '~') {
      negated = true;
      tok.erase(0, 1);
    }
    int idx = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), idx);
    if (ec != std::errc{} || p != tok.data() + tok.size() || tok.empty()) {
      fail(line_no, "bad literal '" + tok + "'");
    }
    if (idx < 1 || idx > n_vars) {
      fail(line_no, "literal index " + std::to_string(idx) + " out of range 1.." +
                        std::to_string(n_vars));
    }
    Literal lit{idx, negated};
    if (mo.contains(lit)) fail(line_no, "duplicate literal");
    mo.add(lit);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return mo;
}

// Header fields look like "n=17"; returns the value text.
std::string header_field(const std::string& tok, const char* key, size_t line_no) {
  std::string prefix = std::string(key) + "=";
  if (tok.rfind(prefix, 0) != 0) {
    fail(line_no, "expected '" + prefix + "...', got '" + tok + "'");
  }
  return tok.substr(prefix.size());
}

int parse_int(const std::string& s, const char* what, size_t line_no) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size() || s.empty()) {
    fail(line_no, std::string("bad ") + what + " '" + s + "'");
  }
  return v;
}

}  // namespace

std::string model_to_text(const TsmModel& m) {
  m.validate();
  std::string out = "tsm v1 n=" + std::to_string(m.n_vars) +
                    " N=" + std::to_string(m.hp.num_states) +
                    " T=" + std::to_string(m.hp.margin) +
                    " s=" + format_double(m.hp.specificity) + "\n";
  for (const Monomial& mo : m.positive) {
    out += "+ ";
    append_monomial(out, mo);
    out += '\n';
  }
  for (const Monomial& mo : m.negative) {
    out += "- ";
    append_monomial(out, mo);
    out += '\n';
  }
  return out;
}

TsmModel model_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  size_t line_no = 0;

  if (!std::getline(in, line)) fail(1, "empty input");
  ++line_no;
  if (!line.empty() && line.back() == '\r') line.pop_back();

  std::istringstream header(line);
  std::string magic, version, tok;
  header >> magic >> version;
  if (magic != "tsm" || version != "v1") fail(line_no, "expected 'tsm v1' header");

  TsmModel m;
  if (!(header >> tok)) fail(line_no, "missing n=");
  m.n_vars = parse_int(header_field(tok, "n", line_no), "n", line_no);
  if (!(header >> tok)) fail(line_no, "missing N=");
  m.hp.num_states = parse_int(header_field(tok, "N", line_no), "N", line_no);
  if (!(header >> tok)) fail(line_no, "missing T=");
  m.hp.margin = parse_int(header_field(tok, "T", line_no), "T", line_no);
  if (!(header >> tok)) fail(line_no, "missing s=");
  {
    std::string sval = header_field(tok, "s", line_no);
    size_t used = 0;
    double s = 0;
    try {
      s = std::stod(sval, &used);
    } catch (const std::exception&) {
      fail(line_no, "bad s '" + sval + "'");
    }
    if (used != sval.size()) fail(line_no, "bad s '" + sval + "'");
    if (!(s > 1.0)) fail(line_no, "s must be > 1");
    m.hp.specificity = s;
  }
  if (header >> tok) fail(line_no, "trailing header token '" + tok + "'");
  if (m.n_vars < 1) fail(line_no, "n must be >= 1");

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.size() < 3 || (line[0] != '+' && line[0] != '-') || line[1] != ' ') {
      fail(line_no, "expected '+ <literals>' or '- <literals>'");
    }
    Monomial mo = parse_monomial(line.substr(2), m.n_vars, line_no);
    if (line[0] == '+') m.positive.push_back(std::move(mo));
    else m.negative.push_back(std::move(mo));
  }

  if (m.positive.size() != m.negative.size()) {
    throw ParseError("model text: " + std::to_string(m.positive.size()) +
                     " positive vs " + std::to_string(m.negative.size()) +
                     " negative monomials (must match)");
  }
  if (m.positive.empty()) throw ParseError("model text: no monomials");
  m.validate();
  return m;
}

void save_model(const TsmModel& m, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << model_to_text(m);
  if (!out) throw Error("write failed for '" + path + "'");
}

TsmModel load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return model_from_text(buf.str());
}

}  // namespace tsmv
