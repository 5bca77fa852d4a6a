#include "mlfact/io.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

namespace mlfact::io {

namespace {

std::vector<std::string> split_tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(std::move(tok));
  return out;
}

/// Line-oriented cursor over a file's text with positioned errors.
class Reader {
 public:
  Reader(const std::string& text, std::string filename)
      : file_(std::move(filename)) {
    std::string line;
    std::istringstream in(text);
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      lines_.push_back(std::move(line));
    }
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw parse_error(file_, cur_, msg);
  }

  const std::string& filename() const { return file_; }

  /// Tokens of the next line; the line must carry exactly `count` tokens.
  std::vector<std::string> line_of(std::size_t count, const std::string& what) {
    cur_ = pos_ + 1;
    if (pos_ >= lines_.size())
      fail("unexpected end of file, expected " + what);
    auto toks = split_tokens(lines_[pos_]);
    if (toks.size() != count)
      fail("expected " + std::to_string(count) + " value(s) for " + what +
           ", found " + std::to_string(toks.size()));
    ++pos_;
    return toks;
  }

  /// Header-style line: first token fixed by the caller, rest returned.
  std::vector<std::string> header(const std::string& what) {
    cur_ = pos_ + 1;
    if (pos_ >= lines_.size())
      fail("unexpected end of file, expected " + what + " header");
    auto toks = split_tokens(lines_[pos_]);
    if (toks.empty()) fail("expected " + what + " header, found a blank line");
    ++pos_;
    return toks;
  }

  void blank_line(const std::string& what) {
    cur_ = pos_ + 1;
    if (pos_ >= lines_.size())
      fail("unexpected end of file, expected a blank line " + what);
    if (!split_tokens(lines_[pos_]).empty())
      fail("expected a blank line " + what);
    ++pos_;
  }

  void expect_end() {
    while (pos_ < lines_.size()) {
      cur_ = pos_ + 1;
      if (!split_tokens(lines_[pos_]).empty())
        fail("unexpected trailing content");
      ++pos_;
    }
  }

 private:
  std::string file_;
  std::vector<std::string> lines_;
  std::size_t pos_ = 0;  // next line to read (0-based)
  std::size_t cur_ = 1;  // line (1-based) that errors refer to
};

bool looks_like_integer(const std::string& tok) {
  std::size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
  if (i == tok.size()) return false;
  for (; i < tok.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return false;
  return true;
}

Int parse_int(Reader& r, const std::string& tok) {
  if (!looks_like_integer(tok)) r.fail("not an integer: '" + tok + "'");
  return Int(tok);
}

std::size_t parse_count(Reader& r, const std::string& tok,
                        const std::string& what) {
  if (!looks_like_integer(tok) || tok[0] == '-')
    r.fail("not a non-negative integer for " + what + ": '" + tok + "'");
  return static_cast<std::size_t>(std::stoull(tok));
}

std::size_t parse_index(Reader& r, const std::string& tok, std::size_t bound,
                        const std::string& what) {
  std::size_t v = parse_count(r, tok, what);
  if (v >= bound)
    r.fail("index " + tok + " out of range for " + what + " (size " +
           std::to_string(bound) + ")");
  return v;
}

std::vector<std::size_t> index_line(Reader& r, std::size_t count,
                                    std::size_t bound,
                                    const std::string& what) {
  auto toks = r.line_of(count, what);
  std::vector<std::size_t> out(count);
  for (std::size_t i = 0; i < count; ++i)
    out[i] = parse_index(r, toks[i], bound, what);
  return out;
}

ab::AbObjPtr parse_abgroup(Reader& r, const std::vector<std::string>& head) {
  if (head.size() != 3)
    r.fail("abgroup header must be 'abgroup <generators> <relators>'");
  std::size_t n = parse_count(r, head[1], "generator count");
  std::size_t m = parse_count(r, head[2], "relator count");
  IntMatrix rels(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    auto toks = r.line_of(m, "relation matrix row");
    for (std::size_t j = 0; j < m; ++j) rels.at(i, j) = parse_int(r, toks[j]);
  }
  return std::make_shared<ab::PresentedAbGroup>(n, std::move(rels));
}

grp::GrpObjPtr parse_fingroup(Reader& r, const std::vector<std::string>& head) {
  if (head.size() != 2 || head[0] != "fingroup")
    r.fail("expected a 'fingroup <order>' header");
  std::size_t n = parse_count(r, head[1], "group order");
  if (n == 0) r.fail("group order must be positive");
  std::vector<std::vector<std::size_t>> table(n);
  for (std::size_t i = 0; i < n; ++i)
    table[i] = index_line(r, n, n, "multiplication table row");
  return std::make_shared<grp::FiniteGroup>(std::move(table));
}

ring::RingObjPtr parse_finring(Reader& r, const std::vector<std::string>& head) {
  if (head.size() != 2)
    r.fail("finring header must be 'finring <order>'");
  std::size_t n = parse_count(r, head[1], "ring order");
  if (n == 0) r.fail("ring order must be positive");
  std::vector<std::vector<std::size_t>> add(n), mul(n);
  for (std::size_t i = 0; i < n; ++i)
    add[i] = index_line(r, n, n, "addition table row");
  r.blank_line("between the addition and multiplication tables");
  for (std::size_t i = 0; i < n; ++i)
    mul[i] = index_line(r, n, n, "multiplication table row");
  return std::make_shared<ring::FiniteCommRing>(std::move(add), std::move(mul));
}

xmod::XModPtr parse_xmod(Reader& r, const std::vector<std::string>& head) {
  if (head.size() != 1) r.fail("xmod header must be the single word 'xmod'");
  auto top = parse_fingroup(r, r.header("top-group fingroup"));
  auto base = parse_fingroup(r, r.header("base-group fingroup"));
  auto bd = index_line(r, top->order(), base->order(), "boundary map");
  std::vector<std::vector<std::size_t>> action(base->order());
  for (std::size_t b = 0; b < base->order(); ++b)
    action[b] = index_line(r, top->order(), top->order(), "action table row");
  grp::GroupHom boundary{top, base, std::move(bd)};
  return std::make_shared<xmod::CrossedModule>(top, base, std::move(boundary),
                                               std::move(action));
}

ParsedObject parse_object_impl(Reader& r) {
  auto head = r.header("structure");
  ParsedObject out;
  if (head[0] == "abgroup") {
    out = {Kind::Ab, ctx::wrap(parse_abgroup(r, head))};
  } else if (head[0] == "fingroup") {
    out = {Kind::Grp, ctx::wrap(parse_fingroup(r, head))};
  } else if (head[0] == "finring") {
    out = {Kind::Ring, ctx::wrap(parse_finring(r, head))};
  } else if (head[0] == "xmod") {
    out = {Kind::XMod, ctx::wrap(parse_xmod(r, head))};
  } else {
    r.fail("unknown structure kind '" + head[0] + "'");
  }
  r.expect_end();
  return out;
}

void print_fingroup(std::ostream& os, const grp::FiniteGroup& g) {
  os << "fingroup " << g.order() << "\n";
  for (std::size_t i = 0; i < g.order(); ++i) {
    for (std::size_t j = 0; j < g.order(); ++j)
      os << (j ? " " : "") << g.mul(i, j);
    os << "\n";
  }
}

void print_index_line(std::ostream& os, const std::vector<std::size_t>& v) {
  for (std::size_t j = 0; j < v.size(); ++j) os << (j ? " " : "") << v[j];
  os << "\n";
}

}  // namespace

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Ab: return "abgroup";
    case Kind::Grp: return "fingroup";
    case Kind::Ring: return "finring";
    case Kind::XMod: return "xmod";
  }
  return "?";
}

const char* morphism_header(Kind k) {
  switch (k) {
    case Kind::Ab:
    case Kind::Grp: return "hom";
    case Kind::Ring: return "ringhom";
    case Kind::XMod: return "xmodhom";
  }
  return "?";
}

ParsedObject parse_object(const std::string& text,
                          const std::string& filename) {
  Reader r(text, filename);
  return parse_object_impl(r);
}

ParsedObject read_object_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error(path, 0, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_object(buf.str(), path);
}

ParsedMorphism read_morphism_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error(path, 0, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  Reader r(buf.str(), path);

  auto head = r.header("morphism");
  if (head[0] != "hom" && head[0] != "ringhom" && head[0] != "xmodhom")
    r.fail("unknown morphism kind '" + head[0] + "'");
  if (head.size() != 3)
    r.fail(head[0] + " header must be '" + head[0] +
           " <domain-file> <codomain-file>'");

  auto dir = std::filesystem::path(path).parent_path();
  auto dom = read_object_file((dir / head[1]).string());
  auto cod = read_object_file((dir / head[2]).string());
  if (dom.kind != cod.kind)
    r.fail(std::string("domain is a ") + kind_name(dom.kind) +
           " but codomain is a " + kind_name(cod.kind));
  if (head[0] != morphism_header(dom.kind))
    r.fail("'" + head[0] + "' cannot relate " + kind_name(dom.kind) +
           " structures (use '" + morphism_header(dom.kind) + "')");

  ParsedMorphism out;
  out.kind = dom.kind;
  out.domain_file = head[1];
  out.codomain_file = head[2];

  switch (dom.kind) {
    case Kind::Ab: {
      auto a = ctx::ab_ptr(dom.obj);
      auto b = ctx::ab_ptr(cod.obj);
      IntMatrix m(b->generators(), a->generators());
      for (std::size_t i = 0; i < b->generators(); ++i) {
        auto toks = r.line_of(a->generators(), "homomorphism matrix row");
        for (std::size_t j = 0; j < a->generators(); ++j)
          m.at(i, j) = parse_int(r, toks[j]);
      }
      ab::AbHom f{a, b, std::move(m)};
      ab::validate(f);
      out.mor = ctx::wrap(std::move(f));
      break;
    }
    case Kind::Grp: {
      auto a = ctx::grp_ptr(dom.obj);
      auto b = ctx::grp_ptr(cod.obj);
      grp::GroupHom f{a, b,
                      index_line(r, a->order(), b->order(), "element images")};
      grp::validate(f);
      out.mor = ctx::wrap(std::move(f));
      break;
    }
    case Kind::Ring: {
      auto a = ctx::ring_ptr(dom.obj);
      auto b = ctx::ring_ptr(cod.obj);
      ring::RingHom f{a, b,
                      index_line(r, a->order(), b->order(), "element images")};
      ring::validate(f);
      out.mor = ctx::wrap(std::move(f));
      break;
    }
    case Kind::XMod: {
      auto a = ctx::xmod_ptr(dom.obj);
      auto b = ctx::xmod_ptr(cod.obj);
      auto f1 = index_line(r, a->top()->order(), b->top()->order(),
                           "top-level element images");
      auto f0 = index_line(r, a->base()->order(), b->base()->order(),
                           "base-level element images");
      xmod::XModMorphism f{a, b,
                           grp::GroupHom{a->top(), b->top(), std::move(f1)},
                           grp::GroupHom{a->base(), b->base(), std::move(f0)}};
      xmod::validate(f);
      out.mor = ctx::wrap(std::move(f));
      break;
    }
  }
  r.expect_end();
  return out;
}

std::string print_object(const ParsedObject& o) {
  std::ostringstream os;
  switch (o.kind) {
    case Kind::Ab: {
      const auto& a = ctx::as_ab(o.obj);
      const auto& rels = a.relations();
      os << "abgroup " << a.generators() << " " << rels.cols() << "\n";
      for (std::size_t i = 0; i < a.generators(); ++i) {
        for (std::size_t j = 0; j < rels.cols(); ++j)
          os << (j ? " " : "") << rels.at(i, j);
        os << "\n";
      }
      break;
    }
    case Kind::Grp:
      print_fingroup(os, ctx::as_grp(o.obj));
      break;
    case Kind::Ring: {
      const auto& rg = ctx::as_ring(o.obj);
      os << "finring " << rg.order() << "\n";
      for (std::size_t i = 0; i < rg.order(); ++i) {
        for (std::size_t j = 0; j < rg.order(); ++j)
          os << (j ? " " : "") << rg.add(i, j);
        os << "\n";
      }
      os << "\n";
      for (std::size_t i = 0; i < rg.order(); ++i) {
        for (std::size_t j = 0; j < rg.order(); ++j)
          os << (j ? " " : "") << rg.mul(i, j);
        os << "\n";
      }
      break;
    }
    case Kind::XMod: {
      const auto& x = ctx::as_xmod(o.obj);
      os << "xmod\n";
      print_fingroup(os, *x.top());
      print_fingroup(os, *x.base());
      print_index_line(os, x.boundary().map);
      for (std::size_t b = 0; b < x.base()->order(); ++b)
        print_index_line(os, x.action()[b]);
      break;
    }
  }
  return os.str();
}

std::string print_morphism(const ParsedMorphism& m) {
  std::ostringstream os;
  os << morphism_header(m.kind) << " " << m.domain_file << " "
     << m.codomain_file << "\n";
  switch (m.kind) {
    case Kind::Ab: {
      const auto& f = ctx::as_ab(m.mor);
      for (std::size_t i = 0; i < f.matrix.rows(); ++i) {
        for (std::size_t j = 0; j < f.matrix.cols(); ++j)
          os << (j ? " " : "") << f.matrix.at(i, j);
        os << "\n";
      }
      break;
    }
    case Kind::Grp:
      print_index_line(os, ctx::as_grp(m.mor).map);
      break;
    case Kind::Ring:
      print_index_line(os, ctx::as_ring(m.mor).map);
      break;
    case Kind::XMod: {
      const auto& f = ctx::as_xmod(m.mor);
      print_index_line(os, f.f1.map);
      print_index_line(os, f.f0.map);
      break;
    }
  }
  return os.str();
}

}  // namespace mlfact::io
