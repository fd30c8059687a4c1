#ifndef PENTACC_MODEL_DATA_HPP
#define PENTACC_MODEL_DATA_HPP

#include <array>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "pentacc/bpoly.hpp"
#include "pentacc/formulas.hpp"
#include "pentacc/ratfun.hpp"
#include "pentacc/upoly.hpp"

#ifndef PENTACC_DATA_DIR
#define PENTACC_DATA_DIR "data"
#endif

namespace pentacc {

namespace detail {

inline std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 0x100000001b3ULL;
    }
    return h;
}

struct DataFile {
    const char* name;
    std::uint64_t digest;
};

// Digests of the shipped coefficient files; a mismatch at load time is a
// fatal integrity error.
inline constexpr std::array<DataFile, 11> kDataFiles = {{
    {"h2.txt", 0xcf21d64a2ae16aabULL},
    {"p4.txt", 0x230218a443aae239ULL},
    {"q4.txt", 0x9cd1a0dc5286046fULL},
    {"r0.txt", 0x3549577dcf1d1ff4ULL},
    {"r1.txt", 0x539f9f73b5c031d6ULL},
    {"r2.txt", 0xed1d49628fa7247eULL},
    {"r3.txt", 0x9f8c1f43cf0756ccULL},
    {"r4.txt", 0x5bce57da14785111ULL},
    {"r5.txt", 0x746ef4bc6a59ffdbULL},
    {"r6.txt", 0x9702e473e1206c26ULL},
    {"r60.txt", 0xc0e72c06f8fca5cbULL},
}};

inline std::string read_data_file(const std::string& dir, const char* name) {
    const std::string path = dir + "/" + name;
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IntegrityError("cannot open data file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace detail

struct ModelPolynomials {
    BiPoly H1;             // derived from h1 via the (s,t) parameterization
    BiPoly H2;             // derived from h2, equals the embedded form
    BiPoly appendixA_H1;   // assembled from the embedded R0..R6
    UniPoly appendixB_R60; // embedded, variable u
    UniPoly p4, q4;        // embedded quartic factors of P(t)
    // exponents of the denominator 2^a t^b (5s^2-4s+1)^c s^d (2s-1)^e under
    // which h1 and h2 become the polynomials H1 and H2; h1 additionally
    // carries the numerator prefactor below:
    //   h1(x3(s), y5(t), ...) = prefactor(s) * H1(s,t) / denominator(s,t)
    RatFun2::Exps h1_den_exps{}, h2_den_exps{};
    RatFun2::Exps h1_num_prefactor_exps{};  // atom exponents of 2 s^2 (2s-1)^2
    std::uint64_t data_digest = 0;  // combined digest of all embedded files
};

inline std::string default_data_dir() {
    if (const char* env = std::getenv("PENTACC_DATA_DIR")) return env;
    return PENTACC_DATA_DIR;
}

// Bindings of the model symbols as rational functions of (s, t).
inline std::map<std::string, RatFun2> parameterization_bindings() {
    auto upoly_s = [](std::initializer_list<long> cs) {
        return BiPoly::from_var1(UniPoly(cs, "s"));
    };
    std::map<std::string, RatFun2> b;
    // x3 = (3s^2-1)(13s^2-8s+1) / (2 (5s^2-4s+1)^2)
    b["x3"] = RatFun2(upoly_s({-1, 0, 3}) * upoly_s({1, -8, 13}), {1, 0, 2, 0, 0});
    // y5 = (1-t^2)/(4t)
    b["y5"] = RatFun2(BiPoly::from_var2(UniPoly({1, 0, -1}, "t")), {2, 1, 0, 0, 0});
    // E1 = 4s(2s-1)/(5s^2-4s+1)
    b["E1"] = RatFun2(upoly_s({0, 4}) * upoly_s({-1, 2}), {0, 0, 1, 0, 0});
    // E2 = -8s(s-1)(3s-1)(2s-1)/(5s^2-4s+1)^2
    b["E2"] = RatFun2(upoly_s({0, -8}) * upoly_s({-1, 1}) * upoly_s({-1, 3}) *
                          upoly_s({-1, 2}),
                      {0, 0, 2, 0, 0});
    // E3 = (t^2+1)^3 / (8 t^3)
    {
        const BiPoly t2p1 = BiPoly::from_var2(UniPoly({1, 0, 1}, "t"));
        b["E3"] = RatFun2(t2p1 * t2p1 * t2p1, {3, 3, 0, 0, 0});
    }
    return b;
}

inline ModelPolynomials build_model_polynomials(const std::string& data_dir =
                                                    default_data_dir()) {
    ModelPolynomials mp;

    // ---- load + digest-check the embedded data ----
    std::map<std::string, std::string> texts;
    std::uint64_t combined = 0xcbf29ce484222325ULL;
    for (const auto& df : detail::kDataFiles) {
        std::string body = detail::read_data_file(data_dir, df.name);
        const std::uint64_t d = detail::fnv1a64(body);
        if (d != df.digest)
            throw IntegrityError(std::string("digest mismatch for ") + df.name);
        combined ^= d;
        combined *= 0x100000001b3ULL;
        texts[df.name] = std::move(body);
    }
    mp.data_digest = combined;

    mp.appendixB_R60 = UniPoly::deserialize(texts["r60.txt"], "u");
    mp.p4 = UniPoly::deserialize(texts["p4.txt"], "t");
    mp.q4 = UniPoly::deserialize(texts["q4.txt"], "t");

    // ---- assemble the Appendix-A oracle for H1 ----
    std::array<UniPoly, 7> R;
    for (int i = 0; i < 7; ++i)
        R[i] = UniPoly::deserialize(texts["r" + std::to_string(i) + ".txt"], "s");
    auto lift = [](const UniPoly& f) { return BiPoly::from_var1(f, "t"); };
    auto tp = [](std::initializer_list<long> cs) {
        return BiPoly::from_var2(UniPoly(cs, "t"), "s");
    };
    mp.appendixA_H1 = lift(R[0]) * tp({1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1})   // t^10+1
                      - lift(R[1]) * tp({0, -1, 0, 0, 0, 0, 0, 4, 0, 1})   // t^9+4t^7-t
                      + lift(R[2]) * tp({0, 0, 1, 0, 0, 0, 0, 0, 1})       // t^8+t^2
                      + lift(R[3]) * tp({0, 0, 0, 1, 0, 0, 0, 1})          // t^7+t^3
                      + lift(R[4]) * tp({0, 0, 0, 0, 1})                   // t^4
                      + lift(R[5]) * tp({0, 0, 0, 0, 0, 1})                // t^5
                      + lift(R[6]) * tp({0, 0, 0, 0, 0, 0, 1});            // t^6

    // ---- derive H1 and H2 through the parameterization ----
    const auto bindings = parameterization_bindings();
    RatFun2 h1c = ratfun_compose(
        [](const auto& x3, const auto& y5, const auto& E1, const auto& E2,
           const auto& E3) { return formulas::h1(x3, y5, E1, E2, E3); },
        bindings);
    // clear the numerator factor 2 s^2 (2s-1)^2; the reduction then leaves
    // the pure polynomial H1 over the surviving denominator monomial
    h1c = h1c.div_atom(0, 1).div_atom(3, 2).div_atom(4, 2);
    mp.H1 = h1c.num();
    mp.h1_den_exps = h1c.den_exponents();
    mp.h1_num_prefactor_exps = {1, 0, 0, 2, 2};
    // the prefactor must cancel exactly, leaving H1 over t^5 (5s^2-4s+1)^14
    if (mp.h1_den_exps != RatFun2::Exps{0, 5, 14, 0, 0})
        throw AppendixMismatch("h1 denominator structure");

    RatFun2 h2c = formulas::h2(bindings.at("x3"), bindings.at("y5"));
    mp.H2 = h2c.num();
    mp.h2_den_exps = h2c.den_exponents();

    // ---- cross-check derived vs embedded ----
    {
        const BiPoly a = mp.H1.primitive_part();
        const BiPoly b = mp.appendixA_H1.primitive_part();
        if (a != b && a != -b) throw AppendixMismatch("H1 vs Appendix A assembly");
        if (mp.H1.total_degree() != 34 || mp.H1.degree1() != 24 || mp.H1.degree2() != 10)
            throw AppendixMismatch("H1 degree profile");
    }
    {
        const BiPoly h2_embedded = BiPoly::deserialize(texts["h2.txt"], "s", "t");
        const BiPoly a = mp.H2.primitive_part();
        const BiPoly b = h2_embedded.primitive_part();
        if (a != b && a != -b) throw AppendixMismatch("H2 vs printed form");
    }
    if (mp.appendixB_R60.degree() != 60 || mp.appendixB_R60.leading() != 1)
        throw AppendixMismatch("R60 shape");
    return mp;
}

}  // namespace pentacc

#endif
