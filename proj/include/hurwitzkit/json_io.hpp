#pragma once

// JSON forms of the library types.  Factorization files look like
//
//   {"group": "s4",    "degree": 4,  "elements": [[2,1,3,4], ...]}     images, 1-based
//   {"group": "braid", "strands": 4, "elements": [[1,2,-1], ...]}      braid words
//   {"group": "f2",    "dim": 6,     "elements": [["100000", ...]]}    matrix rows
//
// "s4" accepts any degree; the name is kept for the common case.

#include <fstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "hurwitzkit/bmf.hpp"
#include "hurwitzkit/braid.hpp"
#include "hurwitzkit/f2.hpp"
#include "hurwitzkit/hurwitz.hpp"
#include "hurwitzkit/perm.hpp"
#include "hurwitzkit/s4orbit.hpp"

namespace hurwitzkit {

using Json = nlohmann::ordered_json;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Json to_json(const Perm& p) { return p.images1(); }
inline Json to_json(const BraidWord& w) { return w.letters(); }
inline Json to_json(const F2Operator& g) { return g.to_rows(); }

inline Json to_json(const Factorization<Perm>& f, int degree) {
  Json j;
  j["group"] = "s4";
  j["degree"] = degree;
  j["elements"] = Json::array();
  for (const auto& p : f.elements()) j["elements"].push_back(to_json(p));
  return j;
}

inline Json to_json(const Counts& n) {
  return Json{{"m", n.m},         {"k", n.k},
              {"nu", n.nu},       {"t_f", n.t_f},
              {"t_g", n.t_g},     {"t", n.t},
              {"g_R", n.g_R},     {"chi", n.chi},
              {"K2", n.K2},       {"r", n.r},
              {"dim_lower", n.dim_lower}, {"dim_upper", n.dim_upper},
              {"weighted_p", n.weighted_p}, {"weighted_q", n.weighted_q}};
}

inline Json to_json(const SurfaceParams& p) { return Json{{"a", p.a}, {"b", p.b}, {"c", p.c}, {"d", p.d}}; }

inline Json to_json(const Census& c) {
  return Json{{"cusps", c.cusps},         {"tangencies", c.tangencies}, {"pos_nodes", c.pos_nodes},
              {"neg_nodes", c.neg_nodes}, {"weighted_p", c.weighted_p}, {"weighted_q", c.weighted_q},
              {"total", c.total}};
}

inline Json to_json(const BmfFactor& f) {
  Json conj = Json::array();
  for (const auto& [t, e] : f.conj) conj.push_back(Json{{"twist", t.to_string()}, {"exp", e}});
  return Json{{"twist", f.twist.to_string()}, {"exp", f.exp}, {"conj", conj}, {"geom", to_string(f.geom_type())}};
}

inline Json to_json(const BmfFactorization& f) {
  Json blocks = Json::array();
  for (const auto& b : f.blocks) {
    Json jb{{"kind", b.kind}, {"rep", b.repetition}};
    if (b.index) jb["i"] = b.index;
    jb["factors"] = Json::array();
    for (const auto& x : b.factors) jb["factors"].push_back(to_json(x));
    blocks.push_back(std::move(jb));
  }
  return Json{{"params", to_json(f.params)}, {"blocks", blocks}};
}

inline Json to_json(const StableProfile& s) {
  return Json{{"ab+cd", s.ab_plus_cd}, {"ab", s.ab},   {"cd", s.cd}, {"a+c", s.a_plus_c},
              {"b+d", s.b_plus_d},     {"chi", s.chi}, {"K2", s.K2}, {"r", s.r}};
}

inline Json to_json(const std::vector<SearchStep>& path) {
  Json out = Json::array();
  for (const auto& s : path) {
    if (s.kind == SearchStep::Kind::kMove)
      out.push_back(s.value);
    else
      out.push_back(Json{{"conjugate", s.value}});
  }
  return out;
}

// ---------------------------------------------------------------------------

inline Perm perm_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("permutation must be an array of images");
  return Perm::from_images(j.get<std::vector<int>>());
}

inline BraidWord braid_from_json(const Json& j, int strands) {
  if (!j.is_array()) throw InputError("braid word must be an array of signed generator indices");
  return BraidWord(strands, j.get<std::vector<int>>());
}

inline F2Operator f2_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("F2 operator must be an array of row strings");
  return F2Operator::from_rows(j.get<std::vector<std::string>>());
}

struct FactorizationFile {
  std::string group;
  int size_param = 0;  // degree, strands or dimension
  std::variant<Factorization<Perm>, Factorization<ArtinAuto>, Factorization<F2Operator>> value;
  std::vector<BraidWord> braid_words;  // source words for "braid"
};

inline FactorizationFile factorization_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("group") || !j.contains("elements"))
    throw InputError("factorization file needs \"group\" and \"elements\"");
  FactorizationFile f;
  f.group = j.at("group").get<std::string>();
  const Json& el = j.at("elements");
  if (!el.is_array()) throw InputError("\"elements\" must be an array");
  if (f.group == "s4" || f.group == "perm") {
    std::vector<Perm> v;
    for (const auto& e : el) v.push_back(perm_from_json(e));
    f.size_param = j.value("degree", v.empty() ? 4 : v.front().degree());
    for (const auto& p : v)
      if (p.degree() != f.size_param) throw InputError("permutation degree mismatch");
    f.value = Factorization<Perm>(std::move(v));
  } else if (f.group == "braid") {
    if (!j.contains("strands")) throw InputError("braid factorization needs \"strands\"");
    f.size_param = j.at("strands").get<int>();
    std::vector<ArtinAuto> v;
    for (const auto& e : el) {
      f.braid_words.push_back(braid_from_json(e, f.size_param));
      v.push_back(artin_rep(f.braid_words.back()));
    }
    f.value = Factorization<ArtinAuto>(std::move(v));
  } else if (f.group == "f2") {
    std::vector<F2Operator> v;
    for (const auto& e : el) v.push_back(f2_from_json(e));
    f.size_param = v.empty() ? j.value("dim", 0) : v.front().dim();
    for (const auto& g : v)
      if (g.dim() != f.size_param) throw InputError("operator dimension mismatch");
    f.value = Factorization<F2Operator>(std::move(v));
  } else {
    throw InputError("unknown group \"" + f.group + "\" (expected s4, braid or f2)");
  }
  return f;
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

// Elements of a factorization in file form.
template <GroupElement G>
Json elements_to_json(const Factorization<G>& f) {
  Json out = Json::array();
  for (const auto& e : f.elements()) {
    if constexpr (std::is_same_v<G, ArtinAuto>) {
      Json imgs = Json::array();
      for (const auto& w : e.images()) imgs.push_back(w.to_string());
      out.push_back(imgs);
    } else {
      out.push_back(to_json(e));
    }
  }
  return out;
}

}  // namespace hurwitzkit
