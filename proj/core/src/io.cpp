#include "homcoho/io.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "json.hpp"

namespace homcoho {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) throw StructureError("invalid JSON input");
    return j;
}

Rational rational_from(const json& v) {
    if (v.is_number_integer()) return Rational(long(v.get<long long>()));
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    throw StructureError("rational literals must be strings like \"3/2\" (or integers)");
}

long index_from(const json& v, long dim, const char* what) {
    if (!v.is_number_integer()) throw StructureError(std::string(what) + " index must be an integer");
    long i = v.get<long>();
    if (i < 0 || i >= dim) throw StructureError(std::string(what) + " index out of range");
    return i;
}

// entries [[a_1..a_r, "c"], ...] -> MultiMap with the given slot routing
MultiMap parse_entries(const json& arr, int n_indices, long dim,
                       const std::function<void(const std::vector<long>&, std::vector<long>&,
                                                std::vector<long>&)>& route,
                       int arity_in, int arity_out, const char* what) {
    if (!arr.is_array()) throw StructureError(std::string(what) + " must be an array of entries");
    MultiMap f(arity_in, arity_out, dim, dim);
    std::set<std::vector<long>> seen;
    for (const json& e : arr) {
        if (!e.is_array() || int(e.size()) != n_indices + 1)
            throw StructureError(std::string(what) + " entry has the wrong shape");
        std::vector<long> idx(n_indices);
        for (int t = 0; t < n_indices; ++t) idx[t] = index_from(e[t], dim, what);
        if (!seen.insert(idx).second)
            throw StructureError(std::string(what) + " has a duplicate entry key");
        std::vector<long> in, out;
        route(idx, in, out);
        Rational c = rational_from(e[n_indices]);
        if (!f.coeff(in, out).is_zero())
            throw StructureError(std::string(what) + " has a duplicate entry key");
        f.add(in, out, c);
    }
    return f;
}

MultiMap parse_mu(const json& arr, long dim) {
    // [i, j, k, c]: e_i e_j = sum_k c e_k
    return parse_entries(arr, 3, dim,
                         [](const std::vector<long>& idx, std::vector<long>& in, std::vector<long>& out) {
                             in = {idx[0], idx[1]};
                             out = {idx[2]};
                         },
                         2, 1, "mu");
}

MultiMap parse_linear(const json& arr, long dim, const char* what) {
    // [k, j, c]: f(e_j) = sum_k c e_k  (column convention)
    return parse_entries(arr, 2, dim,
                         [](const std::vector<long>& idx, std::vector<long>& in, std::vector<long>& out) {
                             in = {idx[1]};
                             out = {idx[0]};
                         },
                         1, 1, what);
}

MultiMap parse_delta(const json& arr, long dim) {
    // [i, j, k, c]: coefficient of e_j (x) e_k in Delta e_i
    return parse_entries(arr, 3, dim,
                         [](const std::vector<long>& idx, std::vector<long>& in, std::vector<long>& out) {
                             in = {idx[0]};
                             out = {idx[1], idx[2]};
                         },
                         1, 2, "delta");
}

std::vector<Rational> parse_vector(const json& arr, long dim, const char* what) {
    if (!arr.is_array() || long(arr.size()) != dim)
        throw StructureError(std::string(what) + " must be a length-dim array");
    std::vector<Rational> v(dim);
    for (long i = 0; i < dim; ++i) v[i] = rational_from(arr[i]);
    return v;
}

ordered_json entries_of_mu(const MultiMap& mu) {
    ordered_json arr = ordered_json::array();
    for (const auto& [key, v] : mu.entries()) {
        auto in = unpack_tuple(key.first, mu.dim_in(), 2);
        arr.push_back({in[0], in[1], long(key.second), v.str()});
    }
    return arr;
}

ordered_json entries_of_linear(const MultiMap& f) {
    ordered_json arr = ordered_json::array();
    for (const auto& [key, v] : f.entries()) arr.push_back({long(key.second), long(key.first), v.str()});
    return arr;
}

ordered_json entries_of_delta(const MultiMap& f) {
    ordered_json arr = ordered_json::array();
    for (const auto& [key, v] : f.entries()) {
        auto out = unpack_tuple(key.second, f.dim_out(), 2);
        arr.push_back({long(key.first), out[0], out[1], v.str()});
    }
    return arr;
}

ordered_json vector_json(const std::vector<Rational>& v) {
    ordered_json arr = ordered_json::array();
    for (const Rational& c : v) arr.push_back(c.str());
    return arr;
}

}  // namespace

ParsedFile parse_algebra_file(const std::string& text) {
    json j = parse_json(text);
    if (!j.is_object()) throw StructureError("algebra file must be a JSON object");
    if (!j.contains("dim")) throw StructureError("algebra file needs a dim field");
    long dim = j["dim"].get<long>();
    if (dim <= 0) throw StructureError("dim must be positive");

    std::vector<std::string> basis;
    if (j.contains("basis")) {
        for (const json& s : j["basis"]) basis.push_back(s.get<std::string>());
        if (long(basis.size()) != dim) throw StructureError("basis label count mismatch");
    }

    ParsedFile out;
    if (!j.contains("mu")) throw StructureError("algebra file needs mu entries");
    if (!j.contains("alpha")) throw StructureError("algebra file needs alpha entries");
    MultiMap mu = parse_mu(j["mu"], dim);
    MultiMap alpha = parse_linear(j["alpha"], dim, "alpha");

    out.is_bialgebra = j.contains("delta") || j.contains("beta") || j.contains("counit");
    if (!out.is_bialgebra) {
        out.algebra.dim = dim;
        out.algebra.basis = basis;
        out.algebra.mu = mu;
        out.algebra.alpha = alpha;
        if (j.contains("unit")) out.algebra.unit = parse_vector(j["unit"], dim, "unit");
        out.algebra.check_shape();
        return out;
    }
    if (!j.contains("delta") || !j.contains("beta") || !j.contains("unit") || !j.contains("counit"))
        throw StructureError("bialgebra file needs delta, beta, unit and counit");
    out.bialgebra.dim = dim;
    out.bialgebra.basis = basis;
    out.bialgebra.mu = mu;
    out.bialgebra.alpha = alpha;
    out.bialgebra.delta = parse_delta(j["delta"], dim);
    out.bialgebra.beta = parse_linear(j["beta"], dim, "beta");
    out.bialgebra.unit = parse_vector(j["unit"], dim, "unit");
    out.bialgebra.counit = parse_vector(j["counit"], dim, "counit");
    out.bialgebra.check_shape();
    return out;
}

MultiMap parse_map_file(const std::string& text) {
    json j = parse_json(text);
    if (!j.is_object() || !j.contains("dim") || !j.contains("entries"))
        throw StructureError("map file needs dim and entries");
    long dim = j["dim"].get<long>();
    if (dim <= 0) throw StructureError("dim must be positive");
    return parse_linear(j["entries"], dim, "map");
}

TruncatedDeformation parse_deformation_file(const std::string& text, const HomAlgebra& base) {
    json j = parse_json(text);
    if (!j.is_object() || !j.contains("order")) throw StructureError("deformation file needs an order");
    int order = j["order"].get<int>();
    if (order < 0) throw StructureError("deformation order must be >= 0");
    TruncatedDeformation d = TruncatedDeformation::undeformed(base, order);
    std::set<std::vector<long>> seen_mu, seen_al;
    if (j.contains("mu"))
        for (const json& e : j["mu"]) {
            if (!e.is_array() || e.size() != 5) throw StructureError("deformation mu entry shape");
            long n = e[0].get<long>();
            if (n < 1 || n > order) throw StructureError("deformation mu order out of range");
            long i = index_from(e[1], base.dim, "mu"), jj = index_from(e[2], base.dim, "mu"),
                 k = index_from(e[3], base.dim, "mu");
            if (!seen_mu.insert({n, i, jj, k}).second)
                throw StructureError("deformation mu has a duplicate entry key");
            d.mus[n].add({i, jj}, {k}, rational_from(e[4]));
        }
    if (j.contains("alpha"))
        for (const json& e : j["alpha"]) {
            if (!e.is_array() || e.size() != 4) throw StructureError("deformation alpha entry shape");
            long n = e[0].get<long>();
            if (n < 1 || n > order) throw StructureError("deformation alpha order out of range");
            long k = index_from(e[1], base.dim, "alpha"), jj = index_from(e[2], base.dim, "alpha");
            if (!seen_al.insert({n, k, jj}).second)
                throw StructureError("deformation alpha has a duplicate entry key");
            d.alphas[n].add(TupleKey(jj), TupleKey(k), rational_from(e[3]));
        }
    d.check_shape();
    return d;
}

std::string serialize_algebra(const HomAlgebra& a) {
    ordered_json j;
    j["schema"] = "homcoho/algebra-v1";
    j["dim"] = a.dim;
    if (!a.basis.empty()) j["basis"] = a.basis;
    j["mu"] = entries_of_mu(a.mu);
    j["alpha"] = entries_of_linear(a.alpha);
    if (a.unit) j["unit"] = vector_json(*a.unit);
    return j.dump(2);
}

std::string serialize_bialgebra(const HomBialgebra& b) {
    ordered_json j;
    j["schema"] = "homcoho/algebra-v1";
    j["dim"] = b.dim;
    if (!b.basis.empty()) j["basis"] = b.basis;
    j["mu"] = entries_of_mu(b.mu);
    j["alpha"] = entries_of_linear(b.alpha);
    j["unit"] = vector_json(b.unit);
    j["delta"] = entries_of_delta(b.delta);
    j["beta"] = entries_of_linear(b.beta);
    j["counit"] = vector_json(b.counit);
    return j.dump(2);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw StructureError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

}  // namespace homcoho
