/*
   Copyright 2026 The tchebint authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "tchebint/simplicial.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "tchebint/error.hpp"

namespace tchebint {

UnivariatePoly::UnivariatePoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UnivariatePoly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational UnivariatePoly::eval(const Rational& t) const {
    Rational r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t + *it;
    return r;
}

UnivariatePoly& UnivariatePoly::operator+=(const UnivariatePoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UnivariatePoly& UnivariatePoly::operator-=(const UnivariatePoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UnivariatePoly& UnivariatePoly::operator*=(const Rational& r) {
    for (auto& c : c_) c *= r;
    trim();
    return *this;
}

UnivariatePoly operator*(const UnivariatePoly& p, const UnivariatePoly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<Rational> out(p.c_.size() + q.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < p.c_.size(); ++i)
        for (std::size_t j = 0; j < q.c_.size(); ++j) out[i + j] += p.c_[i] * q.c_[j];
    return UnivariatePoly(std::move(out));
}

UnivariatePoly UnivariatePoly::pow(int e) const {
    UnivariatePoly r = constant(1);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

std::string UnivariatePoly::to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const Rational& c = c_[k];
        if (sgn(c) == 0) continue;
        s += first ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + ");
        first = false;
        const Rational mag = abs(c);
        if (k == 0 || mag != 1) s += mag.get_str();
        if (k >= 1) s += "x";
        if (k >= 2) s += "^" + std::to_string(k);
    }
    return s;
}

namespace {

UnivariatePoly cheb(int n, const Rational& second) {
    UnivariatePoly prev = UnivariatePoly::constant(1);
    if (n == 0) return prev;
    UnivariatePoly cur({Rational(0), second});
    const UnivariatePoly two_x({Rational(0), Rational(2)});
    for (int k = 1; k < n; ++k) {
        UnivariatePoly next = two_x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

UnivariatePoly transform(const UnivariatePoly& p, UnivariatePoly (*basis)(int)) {
    UnivariatePoly r;
    for (int k = 0; k <= p.degree(); ++k)
        if (sgn(p.coeff(k)) != 0) r += p.coeff(k) * basis(k);
    return r;
}

}  // namespace

UnivariatePoly cheb_T(int n) { return cheb(n, 1); }
UnivariatePoly cheb_U(int n) { return cheb(n, 2); }
UnivariatePoly cheb_transform_T(const UnivariatePoly& p) { return transform(p, cheb_T); }
UnivariatePoly cheb_transform_U(const UnivariatePoly& p) { return transform(p, cheb_U); }

std::uint32_t SimplicialComplex::add_vertex(const std::string& label) {
    auto [it, fresh] = index_.try_emplace(label, static_cast<std::uint32_t>(labels_.size()));
    if (fresh) {
        labels_.push_back(label);
        faces_.insert({it->second});
    }
    return it->second;
}

void SimplicialComplex::insert_closure(IdFace f) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    if (f.size() > 24) throw Error(Errc::TooLarge, "face dimension");
    std::function<void(const IdFace&)> rec = [&](const IdFace& g) {
        if (!faces_.insert(g).second) return;
        if (faces_.size() > kMaxFaces) throw Error(Errc::TooLarge, "complex exceeds the face cap");
        for (std::size_t i = 0; i < g.size(); ++i) {
            IdFace h = g;
            h.erase(h.begin() + static_cast<std::ptrdiff_t>(i));
            rec(h);
        }
    };
    rec(f);
}

SimplicialComplex::Face SimplicialComplex::to_labels(const IdFace& f) const {
    Face out;
    for (auto i : f) out.push_back(labels_[i]);
    std::sort(out.begin(), out.end());
    return out;
}

SimplicialComplex SimplicialComplex::from_faces(const std::vector<std::string>& vertices,
                                                const std::vector<Face>& faces) {
    SimplicialComplex d;
    for (const auto& v : vertices) {
        if (d.index_.count(v)) throw Error(Errc::DuplicateLabel, v);
        d.add_vertex(v);
    }
    for (const auto& f : faces) {
        IdFace ids;
        for (const auto& v : f) {
            auto it = d.index_.find(v);
            if (it == d.index_.end()) throw Error(Errc::UnknownVertex, v);
            ids.push_back(it->second);
        }
        d.insert_closure(std::move(ids));
    }
    return d;
}

std::vector<std::string> SimplicialComplex::vertices() const {
    auto v = labels_;
    std::sort(v.begin(), v.end());
    return v;
}

namespace {

bool face_order(const SimplicialComplex::Face& x, const SimplicialComplex::Face& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
}

}  // namespace

std::vector<SimplicialComplex::Face> SimplicialComplex::faces() const {
    std::vector<Face> out;
    out.reserve(faces_.size());
    for (const auto& f : faces_) out.push_back(to_labels(f));
    std::sort(out.begin(), out.end(), face_order);
    return out;
}

std::vector<SimplicialComplex::Face> SimplicialComplex::facets() const {
    std::vector<Face> out;
    for (const auto& f : faces_) {
        bool maximal = true;
        for (std::uint32_t v = 0; v < labels_.size() && maximal; ++v) {
            if (std::binary_search(f.begin(), f.end(), v)) continue;
            IdFace g = f;
            g.insert(std::upper_bound(g.begin(), g.end(), v), v);
            if (faces_.count(g)) maximal = false;
        }
        if (maximal) out.push_back(to_labels(f));
    }
    std::sort(out.begin(), out.end(), face_order);
    return out;
}

std::vector<std::pair<std::string, std::string>> SimplicialComplex::edges() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& f : faces_)
        if (f.size() == 2) {
            auto l = to_labels(f);
            out.emplace_back(l[0], l[1]);
        }
    std::sort(out.begin(), out.end());
    return out;
}

bool SimplicialComplex::contains(const Face& f) const {
    IdFace ids;
    for (const auto& v : f) {
        auto it = index_.find(v);
        if (it == index_.end()) return false;
        ids.push_back(it->second);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return faces_.count(ids) != 0;
}

int SimplicialComplex::dimension() const {
    std::size_t m = 0;
    for (const auto& f : faces_) m = std::max(m, f.size());
    return static_cast<int>(m) - 1;
}

std::vector<std::uint64_t> SimplicialComplex::f_vector() const {
    std::vector<std::uint64_t> f(static_cast<std::size_t>(dimension() + 2), 0);
    for (const auto& face : faces_) ++f[face.size()];
    return f;
}

SimplicialComplex SimplicialComplex::relabeled(const std::unordered_map<std::string, std::string>& names) const {
    std::vector<std::string> verts;
    for (const auto& l : labels_) {
        auto it = names.find(l);
        verts.push_back(it == names.end() ? l : it->second);
    }
    SimplicialComplex d;
    for (const auto& v : verts) {
        if (d.index_.count(v)) throw Error(Errc::DuplicateLabel, "relabeling is not injective at " + v);
        d.add_vertex(v);
    }
    for (const auto& f : faces_) d.faces_.insert(f);  // ids are preserved
    return d;
}

std::vector<std::uint64_t> f_vector(const SimplicialComplex& d) { return d.f_vector(); }

UnivariatePoly F_from_f_vector(const std::vector<std::uint64_t>& f) {
    const UnivariatePoly step({Rational(-1, 2), Rational(1, 2)});
    UnivariatePoly F, power = UnivariatePoly::constant(1);
    for (std::size_t j = 0; j < f.size(); ++j) {
        F += Rational(BigInt(static_cast<unsigned long>(f[j]))) * power;
        power = power * step;
    }
    return F;
}

UnivariatePoly F_polynomial(const SimplicialComplex& d) { return F_from_f_vector(d.f_vector()); }

UnivariatePoly h_polynomial(const SimplicialComplex& d) {
    const UnivariatePoly F = F_polynomial(d);
    const int dim = d.dimension() + 1;
    const UnivariatePoly plus({Rational(1), Rational(1)}), minus({Rational(1), Rational(-1)});
    UnivariatePoly h;
    for (int k = 0; k <= F.degree(); ++k) h += F.coeff(k) * (plus.pow(k) * minus.pow(dim - k));
    return h;
}

namespace {

SimplicialComplex chains_complex(const Poset& p, const Bitset& keep) {
    std::vector<std::string> verts;
    for (auto x = keep.find_first(); x != Bitset::npos; x = keep.find_next(x)) verts.push_back(p.label(x));
    std::vector<SimplicialComplex::Face> maximal;
    SimplicialComplex::Face cur;
    std::function<void(std::size_t)> rec = [&](std::size_t x) {
        cur.push_back(p.label(x));
        Bitset above = p.up_set(x) & keep;
        above.reset(x);
        if (above.none()) {
            maximal.push_back(cur);
            if (maximal.size() > kMaxFaces) throw Error(Errc::TooLarge, "too many maximal chains");
        }
        for (auto y = above.find_first(); y != Bitset::npos; y = above.find_next(y)) {
            // only step along covers within the kept set to avoid repeats of non-maximal chains
            Bitset between = above & p.down_set(y);
            between.reset(y);
            if (between.none()) rec(y);
        }
        cur.pop_back();
    };
    for (auto x = keep.find_first(); x != Bitset::npos; x = keep.find_next(x)) {
        Bitset below = p.down_set(x) & keep;
        below.reset(x);
        if (below.none()) rec(x);
    }
    return SimplicialComplex::from_faces(verts, maximal);
}

}  // namespace

SimplicialComplex order_complex(const Poset& p) {
    Bitset keep(p.size());
    keep.set();
    return chains_complex(p, keep);
}

SimplicialComplex order_complex(const GradedPoset& p, bool strip_extremes) {
    Bitset keep(p.size());
    keep.set();
    if (strip_extremes) {
        keep.reset(p.bottom());
        keep.reset(p.top());
    }
    return chains_complex(p.poset(), keep);
}

SimplicialComplex join(const SimplicialComplex& x, const SimplicialComplex& y) {
    const auto vx = x.vertices(), vy = y.vertices();
    bool collide = false;
    for (const auto& v : vx)
        if (y.has_vertex(v)) collide = true;
    auto name = [&](const std::string& side, const std::string& v) { return collide ? side + v : v; };
    std::vector<std::string> verts;
    for (const auto& v : vx) verts.push_back(name("L:", v));
    for (const auto& v : vy) verts.push_back(name("R:", v));
    const auto fx = x.faces(), fy = y.faces();
    if (fx.size() * fy.size() > kMaxFaces) throw Error(Errc::TooLarge, "join exceeds the face cap");
    std::vector<SimplicialComplex::Face> faces;
    for (const auto& s : fx)
        for (const auto& t : fy) {
            SimplicialComplex::Face f;
            for (const auto& v : s) f.push_back(name("L:", v));
            for (const auto& v : t) f.push_back(name("R:", v));
            faces.push_back(std::move(f));
        }
    return SimplicialComplex::from_faces(verts, faces);
}

SimplicialComplex suspension(const SimplicialComplex& d) {
    return join(d, SimplicialComplex::from_faces({"s+", "s-"}, {}));
}

SimplicialComplex link(const SimplicialComplex& d, const SimplicialComplex::Face& face) {
    if (!d.contains(face)) throw Error(Errc::FaceNotInComplex, "face is not in the complex");
    std::vector<SimplicialComplex::Face> faces;
    std::set<std::string> verts;
    for (const auto& s : d.faces()) {
        if (!std::includes(s.begin(), s.end(), face.begin(), face.end())) continue;
        SimplicialComplex::Face rest;
        std::set_difference(s.begin(), s.end(), face.begin(), face.end(), std::back_inserter(rest));
        verts.insert(rest.begin(), rest.end());
        faces.push_back(std::move(rest));
    }
    return SimplicialComplex::from_faces({verts.begin(), verts.end()}, faces);
}

std::string midpoint_label(const std::string& u, const std::string& v) {
    return u < v ? "mid(" + u + "|" + v + ")" : "mid(" + v + "|" + u + ")";
}

SimplicialComplex stellar_subdivision(const SimplicialComplex& d, const std::string& u, const std::string& v,
                                      const std::string& w) {
    if (!d.contains({u, v}) || u == v) throw Error(Errc::FaceNotInComplex, "{" + u + "," + v + "} is not an edge");
    if (d.has_vertex(w)) throw Error(Errc::DuplicateLabel, w);
    SimplicialComplex out;
    for (const auto& l : d.labels_) out.add_vertex(l);
    const auto iu = out.index_.at(u), iv = out.index_.at(v);
    const auto iw = out.add_vertex(w);
    for (const auto& f : d.faces_) {
        const bool has_u = std::binary_search(f.begin(), f.end(), iu);
        const bool has_v = std::binary_search(f.begin(), f.end(), iv);
        if (!(has_u && has_v)) {
            out.insert_closure(f);
            continue;
        }
        SimplicialComplex::IdFace tau;
        for (auto x : f)
            if (x != iu && x != iv) tau.push_back(x);
        for (auto end : {iu, iv}) {
            auto g = tau;
            g.push_back(end);
            g.push_back(iw);
            out.insert_closure(std::move(g));
        }
    }
    return out;
}

SimplicialComplex tchebyshev_triangulation(const SimplicialComplex& d,
                                           const std::vector<std::pair<std::string, std::string>>& edge_order) {
    std::vector<std::pair<std::string, std::string>> given;
    for (const auto& [u, v] : edge_order) given.emplace_back(std::min(u, v), std::max(u, v));
    auto sorted = given;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != d.edges()) throw Error(Errc::NotAnEdgePermutation, "edge order is not a permutation of the edges");
    SimplicialComplex t = d;
    for (const auto& [u, v] : given) t = stellar_subdivision(t, u, v, midpoint_label(u, v));
    return t;
}

ComplexMultiset second_kind_links(const SimplicialComplex& t, const std::vector<std::string>& original_vertices) {
    ComplexMultiset out;
    for (const auto& v : original_vertices) {
        if (!t.has_vertex(v)) throw Error(Errc::UnknownVertex, v);
        out.push_back(link(t, {v}));
    }
    return out;
}

UnivariatePoly summed_F(const ComplexMultiset& m) {
    UnivariatePoly F;
    for (const auto& d : m) F += F_polynomial(d);
    return F;
}

std::vector<std::pair<std::string, std::string>> containment_edge_order(const Poset& p) {
    struct Entry {
        std::size_t card;
        std::string lo, hi;
    };
    std::vector<Entry> entries;
    for (std::size_t u = 0; u < p.size(); ++u)
        for (auto v = p.up_set(u).find_first(); v != Bitset::npos; v = p.up_set(u).find_next(v))
            if (v != u) entries.push_back({(p.up_set(u) & p.down_set(v)).count(), p.label(u), p.label(v)});
    std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
        if (x.card != y.card) return x.card > y.card;
        return std::tie(x.lo, x.hi) < std::tie(y.lo, y.hi);
    });
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& e : entries) out.emplace_back(e.lo, e.hi);
    return out;
}

bool order_complex_of_intervals_check(const Poset& p) {
    const SimplicialComplex direct = order_complex(interval_poset(p));
    std::unordered_map<std::string, std::string> names;
    for (std::size_t u = 0; u < p.size(); ++u)
        for (auto v = p.up_set(u).find_first(); v != Bitset::npos; v = p.up_set(u).find_next(v))
            names[interval_label(p.label(u), p.label(v))] =
                u == v ? p.label(u) : midpoint_label(p.label(u), p.label(v));
    const SimplicialComplex triangulated = tchebyshev_triangulation(order_complex(p), containment_edge_order(p));
    return direct.relabeled(names) == triangulated;
}

nlohmann::json to_json(const SimplicialComplex& d) {
    return {{"vertices", d.vertices()}, {"facets", d.facets()}};
}

SimplicialComplex complex_from_json(const nlohmann::json& j) {
    try {
        return SimplicialComplex::from_faces(j.at("vertices").get<std::vector<std::string>>(),
                                             j.at("facets").get<std::vector<SimplicialComplex::Face>>());
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::ParseError, e.what());
    }
}

nlohmann::json to_json(const UnivariatePoly& p) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(rational_to_json(c));
    return {{"coeffs", coeffs}};
}

UnivariatePoly univariate_from_json(const nlohmann::json& j) {
    try {
        std::vector<Rational> c;
        for (const auto& x : j.at("coeffs")) c.push_back(rational_from_json(x));
        return UnivariatePoly(std::move(c));
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::ParseError, e.what());
    }
}

}  // namespace tchebint
