#include "linclon/json_io.hpp"

#include <limits>

#include "linclon/error.hpp"

namespace linclon {

namespace {

std::uint32_t get_u32(const json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    throw Error(ErrorKind::Malformed, std::string(what) + " must be a nonnegative integer");
  const auto v = j.get<std::uint64_t>();
  if (v > std::numeric_limits<std::uint32_t>::max()) throw Error(ErrorKind::Malformed, std::string(what) + " too large");
  return static_cast<std::uint32_t>(v);
}

}  // namespace

FieldSpec parse_field(const json& j) {
  if (!j.is_object() || !j.contains("p")) throw Error(ErrorKind::Malformed, "field needs \"p\"");
  const std::uint32_t p = get_u32(j.at("p"), "p");
  const std::uint32_t k = j.contains("k") ? get_u32(j.at("k"), "k") : 1;
  std::optional<std::vector<std::uint32_t>> poly;
  if (j.contains("poly")) {
    if (!j.at("poly").is_array()) throw Error(ErrorKind::Malformed, "poly must be an array");
    std::vector<std::uint32_t> c;
    for (const auto& x : j.at("poly")) c.push_back(get_u32(x, "poly coefficient"));
    // the prime-field polynomial x carries no information
    if (!(k == 1 && c == std::vector<std::uint32_t>{0, 1})) poly = std::move(c);
  }
  return FieldSpec::make(p, k, std::move(poly));
}

ProductRing parse_ring(const json& j) {
  const json* list = nullptr;
  if (j.is_object() && j.contains("factors")) list = &j.at("factors");
  else if (j.is_array()) list = &j;
  if (list == nullptr) {
    if (j.is_object() && j.contains("p")) return ProductRing::make({parse_field(j)});
    throw Error(ErrorKind::Malformed, "ring needs \"factors\"");
  }
  if (!list->is_array()) throw Error(ErrorKind::Malformed, "factors must be an array");
  std::vector<FieldSpec> fields;
  for (const auto& f : *list) fields.push_back(parse_field(f));
  return ProductRing::make(std::move(fields));
}

FiniteFunction parse_function(const json& j, const ProductRing* K, const ProductRing* F) {
  if (!j.is_object()) throw Error(ErrorKind::Malformed, "function must be an object");
  auto ring = [&](const char* key, const ProductRing* fallback) {
    if (j.contains(key)) {
      ProductRing r = parse_ring(j.at(key));
      if (fallback && !(r == *fallback))
        throw Error(ErrorKind::ShapeMismatch, std::string(key) + " differs from the configured ring");
      return r;
    }
    if (!fallback) throw Error(ErrorKind::Malformed, std::string("function needs \"") + key + "\"");
    return *fallback;
  };
  ProductRing domain = ring("domain", K);
  ProductRing codomain = ring("codomain", F);
  if (!j.contains("arity") || !j.contains("table")) throw Error(ErrorKind::Malformed, "function needs arity and table");
  const std::uint32_t n = get_u32(j.at("arity"), "arity");
  if (n == 0) throw Error(ErrorKind::BadArity, "arity must be at least 1");
  FiniteFunction f(domain, codomain, n);
  const json& table = j.at("table");
  if (!table.is_array() || table.size() != f.size())
    throw Error(ErrorKind::Malformed, "table must list |K|^arity entries");
  for (std::size_t x = 0; x < table.size(); ++x) {
    const json& entry = table[x];
    RingElement v;
    if (entry.is_array()) {
      for (const auto& c : entry) v.coords.push_back(FieldElement{get_u32(c, "table value")});
    } else if (codomain.factor_count() == 1) {
      v.coords.push_back(FieldElement{get_u32(entry, "table value")});
    } else {
      throw Error(ErrorKind::Malformed, "table entries must be coordinate lists");
    }
    if (!codomain.contains(v)) throw Error(ErrorKind::Malformed, "table entry outside the codomain");
    f.set(x, v);
  }
  return f;
}

json to_json(const FieldSpec& f) { return json{{"p", f.p()}, {"k", f.k()}, {"poly", f.poly()}}; }

json to_json(const ProductRing& r) {
  json factors = json::array();
  for (const auto& f : r.factors()) factors.push_back(to_json(f));
  return json{{"factors", factors}};
}

json to_json(const FiniteFunction& f) {
  json table = json::array();
  for (PointIndex x = 0; x < f.size(); ++x) {
    json entry = json::array();
    for (std::size_t i = 0; i < f.codomain().factor_count(); ++i) entry.push_back(f.component(i)[x]);
    table.push_back(std::move(entry));
  }
  return json{{"domain", to_json(f.domain())},
              {"codomain", to_json(f.codomain())},
              {"arity", f.arity()},
              {"table", std::move(table)}};
}

json to_json(const SubspaceBasis& b) {
  return json{{"p", b.p()}, {"dim", b.dim()}, {"rank", b.rank()}, {"basis", b.rows()}};
}

json to_json(const ClonoidSlice& s) {
  json parts = json::array();
  for (const auto& b : s.parts()) parts.push_back(to_json(b));
  return json{{"domain", to_json(s.domain())},
              {"codomain", to_json(s.codomain())},
              {"arity", s.arity()},
              {"ranks", s.ranks()},
              {"parts", std::move(parts)}};
}

json to_json(const GenerationVerdict& v) {
  return json{{"k", v.k}, {"rank_C", v.rank_C}, {"rank_unary", v.rank_unary}, {"equal", v.equal}};
}

json to_json(const BigInt& n) {
  if (n <= std::numeric_limits<std::uint64_t>::max()) return json(n.convert_to<std::uint64_t>());
  return json(n.str());
}

json to_json(const SubmoduleLattice& l) {
  json elements = json::array();
  for (std::size_t i = 0; i < l.size(); ++i)
    elements.push_back(json{{"index", i}, {"rank", l.elements[i].rank()}, {"basis", l.elements[i].basis.rows()}});
  json covers = json::array();
  for (const auto& [lo, hi] : l.covers) covers.push_back(json::array({lo, hi}));
  return json{{"p", l.p},
              {"K", to_json(l.K)},
              {"size", l.size()},
              {"elements", std::move(elements)},
              {"covers", std::move(covers)}};
}

json to_json(const ProductLattice& l) {
  json parts = json::array();
  json part_sizes = json::array();
  for (const auto& part : l.parts()) {
    parts.push_back(to_json(part));
    part_sizes.push_back(part.size());
  }
  json elements = json::array();
  for (std::uint64_t idx = 0; idx < l.size(); ++idx) {
    const auto t = l.tuple_at(idx);
    json ranks = json::array();
    for (std::size_t i = 0; i < t.size(); ++i) ranks.push_back(l.parts()[i].elements[t[i]].rank());
    elements.push_back(json{{"index", idx}, {"tuple", t}, {"ranks", std::move(ranks)}});
  }
  json covers = json::array();
  for (const auto& [lo, hi] : l.covers()) covers.push_back(json::array({lo, hi}));
  return json{{"K", to_json(l.domain())},
              {"F", to_json(l.codomain())},
              {"size", l.size()},
              {"part_sizes", std::move(part_sizes)},
              {"parts", std::move(parts)},
              {"elements", std::move(elements)},
              {"covers", std::move(covers)}};
}

}  // namespace linclon
