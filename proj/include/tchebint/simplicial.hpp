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

#ifndef TCHEBINT_SIMPLICIAL_HPP
#define TCHEBINT_SIMPLICIAL_HPP

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tchebint/poset.hpp"
#include "tchebint/rational.hpp"

namespace tchebint {

class UnivariatePoly {
   public:
    UnivariatePoly() = default;
    explicit UnivariatePoly(std::vector<Rational> coeffs);  // ascending degree
    static UnivariatePoly constant(const Rational& c) { return UnivariatePoly({c}); }
    static UnivariatePoly x() { return UnivariatePoly({Rational(0), Rational(1)}); }

    const std::vector<Rational>& coeffs() const noexcept { return c_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    Rational coeff(int k) const { return k >= 0 && k <= degree() ? c_[static_cast<std::size_t>(k)] : Rational(0); }
    bool is_zero() const noexcept { return c_.empty(); }
    Rational eval(const Rational& t) const;

    UnivariatePoly& operator+=(const UnivariatePoly& o);
    UnivariatePoly& operator-=(const UnivariatePoly& o);
    UnivariatePoly& operator*=(const Rational& r);
    friend UnivariatePoly operator+(UnivariatePoly p, const UnivariatePoly& q) { return p += q; }
    friend UnivariatePoly operator-(UnivariatePoly p, const UnivariatePoly& q) { return p -= q; }
    friend UnivariatePoly operator*(const UnivariatePoly& p, const UnivariatePoly& q);
    friend UnivariatePoly operator*(const Rational& r, UnivariatePoly p) { return p *= r; }
    friend bool operator==(const UnivariatePoly&, const UnivariatePoly&) = default;

    UnivariatePoly pow(int e) const;
    std::string to_string() const;

   private:
    void trim();
    std::vector<Rational> c_;
};

UnivariatePoly cheb_T(int n);
UnivariatePoly cheb_U(int n);
UnivariatePoly cheb_transform_T(const UnivariatePoly& p);
UnivariatePoly cheb_transform_U(const UnivariatePoly& p);

inline constexpr std::size_t kMaxFaces = std::size_t{1} << 16;

class SimplicialComplex {
   public:
    using Face = std::vector<std::string>;  // sorted labels

    SimplicialComplex() { faces_.insert(IdFace{}); }
    // downward closure of the given faces; vertices may include isolated ones
    static SimplicialComplex from_faces(const std::vector<std::string>& vertices, const std::vector<Face>& faces);

    std::vector<std::string> vertices() const;
    std::size_t num_vertices() const noexcept { return labels_.size(); }
    bool has_vertex(const std::string& v) const { return index_.count(v) != 0; }
    std::vector<Face> faces() const;   // all faces, empty face first
    std::vector<Face> facets() const;
    std::vector<std::pair<std::string, std::string>> edges() const;
    std::size_t num_faces() const noexcept { return faces_.size(); }
    bool contains(const Face& f) const;
    int dimension() const;

    std::vector<std::uint64_t> f_vector() const;  // f_{-1}, f_0, ...

    SimplicialComplex relabeled(const std::unordered_map<std::string, std::string>& names) const;

    friend bool operator==(const SimplicialComplex& x, const SimplicialComplex& y) {
        return x.vertices() == y.vertices() && x.faces() == y.faces();
    }

   private:
    using IdFace = std::vector<std::uint32_t>;
    std::uint32_t add_vertex(const std::string& label);
    void insert_closure(IdFace f);
    Face to_labels(const IdFace& f) const;

    friend SimplicialComplex stellar_subdivision(const SimplicialComplex&, const std::string&, const std::string&,
                                                 const std::string&);

    std::vector<std::string> labels_;
    std::unordered_map<std::string, std::uint32_t> index_;
    std::set<IdFace> faces_;
};

using ComplexMultiset = std::vector<SimplicialComplex>;

std::vector<std::uint64_t> f_vector(const SimplicialComplex& d);
UnivariatePoly F_polynomial(const SimplicialComplex& d);
UnivariatePoly F_from_f_vector(const std::vector<std::uint64_t>& f);
UnivariatePoly h_polynomial(const SimplicialComplex& d);

SimplicialComplex order_complex(const Poset& p);
SimplicialComplex order_complex(const GradedPoset& p, bool strip_extremes);

SimplicialComplex join(const SimplicialComplex& x, const SimplicialComplex& y);
SimplicialComplex suspension(const SimplicialComplex& d);
SimplicialComplex link(const SimplicialComplex& d, const SimplicialComplex::Face& face);

std::string midpoint_label(const std::string& u, const std::string& v);
// subdivide edge {u,v} at a new vertex w
SimplicialComplex stellar_subdivision(const SimplicialComplex& d, const std::string& u, const std::string& v,
                                      const std::string& w);
SimplicialComplex tchebyshev_triangulation(const SimplicialComplex& d,
                                           const std::vector<std::pair<std::string, std::string>>& edge_order);
ComplexMultiset second_kind_links(const SimplicialComplex& t, const std::vector<std::string>& original_vertices);
UnivariatePoly summed_F(const ComplexMultiset& m);

// non-singleton intervals by decreasing cardinality, ties lexicographic
std::vector<std::pair<std::string, std::string>> containment_edge_order(const Poset& p);
bool order_complex_of_intervals_check(const Poset& p);

nlohmann::json to_json(const SimplicialComplex& d);
SimplicialComplex complex_from_json(const nlohmann::json& j);
nlohmann::json to_json(const UnivariatePoly& p);
UnivariatePoly univariate_from_json(const nlohmann::json& j);

}  // namespace tchebint

#endif
