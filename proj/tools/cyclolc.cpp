/*
   Copyright 2026 The cyclolc Authors

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

#include <algorithm>
#include <array>
#include <cstdint>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cyclolc/closed_form.hpp"
#include "cyclolc/cyclotomy.hpp"
#include "cyclolc/gf2poly.hpp"
#include "cyclolc/residue.hpp"
#include "cyclolc/sequence.hpp"
#include "cyclolc/smatrix.hpp"
#include "parallel.hpp"

namespace {

using std::uint64_t;

std::vector<std::pair<uint64_t, uint64_t>> order8_pairs(uint64_t max) {
    std::vector<uint64_t> primes;
    for (uint64_t n = 17; n <= max; n += 8) {
        // gcd(p-1, q-1) = 8 forces p = q = 1 (mod 8)
        if (cyclolc::is_probable_prime(n))
            primes.push_back(n);
    }
    std::vector<std::pair<uint64_t, uint64_t>> pairs;
    for (size_t i = 0; i < primes.size(); ++i) {
        for (size_t j = i + 1; j < primes.size(); ++j) {
            if (std::gcd(primes[i] - 1, primes[j] - 1) == 8)
                pairs.emplace_back(primes[i], primes[j]);
        }
    }
    return pairs;
}

uint64_t random_common_root(uint64_t p, uint64_t q, std::mt19937_64& rng) {
    const uint64_t n = p * q;
    std::uniform_int_distribution<uint64_t> dist(2, n - 1);
    uint64_t x = dist(rng);
    for (uint64_t steps = 0; steps < n; ++steps) {
        if (x % p != 0 && x % q != 0 && cyclolc::is_primitive_root(x, p) &&
            cyclolc::is_primitive_root(x, q))
            return x;
        ++x;
        if (x >= n)
            x = 2;
    }
    throw std::logic_error("random_common_root: scan found no common primitive root");
}

uint64_t lc_by_smatrix(const cyclolc::CyclotomyContext& ctx,
                       const cyclolc::FieldSpec& field,
                       const cyclolc::FieldElement& alpha) {
    return cyclolc::lc_from_smatrix(cyclolc::build_smatrix(ctx, field, alpha));
}

std::string fraction(unsigned numerator, unsigned denominator) {
    if (numerator == 0)
        return "0";
    const unsigned g = std::gcd(numerator, denominator);
    std::ostringstream os;
    os << numerator / g << "/" << denominator / g;
    return os.str();
}

int run_lc(uint64_t p, uint64_t q, std::optional<uint64_t> g,
           const std::string& method, bool verbose) {
    std::optional<cyclolc::CyclotomyContext> ctx;
    auto context = [&]() -> const cyclolc::CyclotomyContext& {
        if (!ctx)
            ctx = cyclolc::build_context(p, q, g);
        return *ctx;
    };

    uint64_t lc = 0;
    if (method == "closed") {
        lc = cyclolc::lc_closed_form(p, q);
    } else if (method == "gcd") {
        lc = cyclolc::linear_complexity_gcd(cyclolc::generate(context()));
    } else if (method == "bm") {
        lc = cyclolc::berlekamp_massey(cyclolc::generate(context())).complexity;
    } else {
        const uint64_t degree = cyclolc::splitting_field_degree(p, q);
        if (degree > 128)
            throw std::invalid_argument("smatrix: splitting field degree " +
                                        std::to_string(degree) + " exceeds 128");
        const auto field = cyclolc::FieldSpec::build(static_cast<unsigned>(degree));
        const auto alpha = cyclolc::primitive_nth_root(field, p * q);
        lc = lc_by_smatrix(context(), field, alpha);
    }
    std::cout << lc << "\n";

    if (verbose) {
        const auto& c = context();
        std::cout << "g = " << c.g << "\n";
        std::cout << "d = " << c.d << "\n";
        if (c.d == 8) {
            const auto cls = cyclolc::classify(p, q);
            std::cout << "Res(2,p) = " << static_cast<unsigned>(cls.res_2p) << "\n";
            std::cout << "Res(2,q) = " << static_cast<unsigned>(cls.res_2q) << "\n";
            std::cout << "Res(p,q) = " << static_cast<unsigned>(cls.res_pq) << "\n";
            std::cout << "case = " << cls.case_id << "\n";
            std::cout << "formula = " << cls.case_formula << "\n";
        }
        const auto s = cyclolc::generate(c);
        std::cout << "ones = " << s.ones() << "\n";
        std::cout << "minimal polynomial degree = "
                  << cyclolc::minimal_polynomial(s).degree() << "\n";
    }
    return 0;
}

struct VerifyOptions {
    uint64_t max = 0;
    std::vector<std::string> methods;
    std::optional<uint64_t> seed;
    uint64_t smatrix_max_degree = 128;
};

int run_verify(const VerifyOptions& opt) {
    const auto pairs = order8_pairs(opt.max);
    if (pairs.empty()) {
        std::cout << "no pairs\n";
        return 0;
    }

    std::vector<std::optional<uint64_t>> roots(pairs.size());
    if (opt.seed) {
        std::mt19937_64 rng(*opt.seed);
        for (size_t i = 0; i < pairs.size(); ++i)
            roots[i] = random_common_root(pairs[i].first, pairs[i].second, rng);
    }

    const bool needs_sequence =
        std::any_of(opt.methods.begin(), opt.methods.end(),
                    [](const std::string& m) { return m != "closed"; });

    std::vector<std::string> lines(pairs.size());
    std::vector<char> passed(pairs.size(), 0);

    cyclolc::parallel_for(pairs.size(), [&](size_t idx) {
        const uint64_t p = pairs[idx].first;
        const uint64_t q = pairs[idx].second;

        std::optional<cyclolc::CyclotomyContext> forward, backward;
        std::optional<cyclolc::BitSequence> seq_fwd, seq_bwd;
        if (needs_sequence) {
            forward = cyclolc::build_context(p, q, roots[idx]);
            backward = cyclolc::build_context(q, p, forward->g);
            seq_fwd = cyclolc::generate(*forward);
            seq_bwd = cyclolc::generate(*backward);
        }

        std::vector<std::pair<std::string, std::array<uint64_t, 2>>> values;
        std::string note;
        for (const auto& method : opt.methods) {
            if (method == "closed") {
                values.push_back({method,
                                  {cyclolc::lc_closed_form(p, q),
                                   cyclolc::lc_closed_form(q, p)}});
            } else if (method == "gcd") {
                values.push_back({method,
                                  {cyclolc::linear_complexity_gcd(*seq_fwd),
                                   cyclolc::linear_complexity_gcd(*seq_bwd)}});
            } else if (method == "bm") {
                values.push_back({method,
                                  {cyclolc::berlekamp_massey(*seq_fwd).complexity,
                                   cyclolc::berlekamp_massey(*seq_bwd).complexity}});
            } else { // smatrix
                const uint64_t degree = cyclolc::splitting_field_degree(p, q);
                if (degree > opt.smatrix_max_degree) {
                    note = " smatrix=SKIP(degree " + std::to_string(degree) +
                           " > " + std::to_string(opt.smatrix_max_degree) + ")";
                    continue;
                }
                const auto field =
                    cyclolc::FieldSpec::build(static_cast<unsigned>(degree));
                const auto alpha = cyclolc::primitive_nth_root(field, p * q);
                values.push_back({method,
                                  {lc_by_smatrix(*forward, field, alpha),
                                   lc_by_smatrix(*backward, field, alpha)}});
            }
        }

        bool pass = true;
        std::array<std::optional<uint64_t>, 2> reference;
        for (const auto& [method, v] : values) {
            for (int o = 0; o < 2; ++o) {
                if (!reference[o])
                    reference[o] = v[o];
                else if (*reference[o] != v[o])
                    pass = false;
            }
        }

        std::ostringstream os;
        os << (pass ? "PASS" : "FAIL") << " p=" << p << " q=" << q;
        if (forward)
            os << " g=" << forward->g;
        if (pass && reference[0]) {
            os << " L(p,q)=" << *reference[0] << " L(q,p)=" << *reference[1];
        } else {
            for (const auto& [method, v] : values)
                os << " " << method << ":L(p,q)=" << v[0] << ",L(q,p)=" << v[1];
        }
        os << note;
        lines[idx] = os.str();
        passed[idx] = pass ? 1 : 0;
    });

    size_t pass_count = 0;
    for (size_t i = 0; i < pairs.size(); ++i) {
        std::cout << lines[i] << "\n";
        pass_count += passed[i];
    }
    std::cout << "pairs=" << pairs.size() << " pass=" << pass_count
              << " fail=" << (pairs.size() - pass_count) << "\n";
    return pass_count == pairs.size() ? 0 : 1;
}

int run_table(uint64_t max, const std::string& format) {
    const auto pairs = order8_pairs(max);
    struct Row {
        uint64_t p, q, lpq, lqp;
    };
    std::vector<Row> rows(pairs.size());
    cyclolc::parallel_for(pairs.size(), [&](size_t i) {
        rows[i] = {pairs[i].first, pairs[i].second,
                   cyclolc::lc_closed_form(pairs[i].first, pairs[i].second),
                   cyclolc::lc_closed_form(pairs[i].second, pairs[i].first)};
    });

    if (format == "csv") {
        std::cout << "p,q,L_pq,L_qp\n";
        for (const auto& r : rows)
            std::cout << r.p << "," << r.q << "," << r.lpq << "," << r.lqp << "\n";
    } else if (format == "markdown") {
        std::cout << "| p | q | L_pq | L_qp |\n";
        std::cout << "| --- | --- | --- | --- |\n";
        for (const auto& r : rows)
            std::cout << "| " << r.p << " | " << r.q << " | " << r.lpq << " | "
                      << r.lqp << " |\n";
    } else {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& r : rows) {
            out.push_back({{"p", r.p},
                           {"q", r.q},
                           {"L_pq", r.lpq},
                           {"L_qp", r.lqp}});
        }
        std::cout << out.dump(2) << "\n";
    }
    return 0;
}

int run_classify(uint64_t p, uint64_t q) {
    const auto c = cyclolc::classify(p, q);
    std::cout << "p = " << p << "\n";
    std::cout << "q = " << q << "\n";
    std::cout << "Res(2,p) = " << static_cast<unsigned>(c.res_2p) << "\n";
    std::cout << "Res(2,q) = " << static_cast<unsigned>(c.res_2q) << "\n";
    std::cout << "Res(p,q) = " << static_cast<unsigned>(c.res_pq) << "\n";
    std::cout << "case = " << c.case_id << "\n";
    std::cout << "formula = " << c.case_formula << "\n";
    std::cout << "eps = " << fraction(c.eps_halves, 2) << "\n";
    std::cout << "kappa = " << fraction(c.kappa_halves, 2) << "\n";
    std::cout << "eta = " << fraction(c.eta_quarters, 4) << "\n";
    std::cout << "L = " << cyclolc::lc_closed_form(p, q) << "\n";
    return 0;
}

int run_seq(uint64_t p, uint64_t q, std::optional<uint64_t> g,
            const std::string& format) {
    const auto ctx = cyclolc::build_context(p, q, g);
    const auto s = cyclolc::generate(ctx);
    if (format == "ascii") {
        for (uint64_t i = 0; i < s.period(); ++i) {
            std::cout << (s.bit(i) ? '1' : '0');
            if (i % 64 == 63 || i + 1 == s.period())
                std::cout << '\n';
        }
    } else {
        const uint64_t bytes = (s.period() + 7) / 8;
        std::string buf(bytes, '\0');
        for (uint64_t k = 0; k < bytes; ++k)
            buf[k] = static_cast<char>((s.words()[k / 8] >> (8 * (k % 8))) & 0xff);
        std::cout.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    }
    return 0;
}

int run_minpoly(uint64_t p, uint64_t q, std::optional<uint64_t> g) {
    const auto ctx = cyclolc::build_context(p, q, g);
    const auto s = cyclolc::generate(ctx);
    std::cout << cyclolc::to_hex(cyclolc::minimal_polynomial(s)) << "\n";
    return 0;
}

int run_smatrix(uint64_t p, uint64_t q, std::optional<uint64_t> g) {
    const auto ctx = cyclolc::build_context(p, q, g);
    const uint64_t degree = cyclolc::splitting_field_degree(p, q);
    if (degree > 128)
        throw std::invalid_argument("smatrix: splitting field degree " +
                                    std::to_string(degree) + " exceeds 128");
    const auto field = cyclolc::FieldSpec::build(static_cast<unsigned>(degree));
    const auto alpha = cyclolc::primitive_nth_root(field, p * q);
    const auto m = cyclolc::build_smatrix(ctx, field, alpha);
    std::cerr << "field degree " << degree << ", modulus "
              << cyclolc::to_hex(field.modulus()) << "\n";
    for (unsigned i = 0; i <= m.d; ++i) {
        for (unsigned j = 0; j <= m.d; ++j) {
            if (j > 0)
                std::cout << " ";
            std::cout << m.at(i, j).to_hex();
        }
        std::cout << "\n";
    }
    return 0;
}

std::vector<std::string> split_methods(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string token;
    while (std::getline(ss, token, ','))
        out.push_back(token);
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Linear complexity toolkit for generalized cyclotomic sequences of period pq"};
    app.require_subcommand(1);

    int rc = 0;

    auto* lc = app.add_subcommand("lc", "Linear complexity of one sequence");
    uint64_t lc_p = 0, lc_q = 0;
    std::optional<uint64_t> lc_g;
    std::string lc_method = "closed";
    bool lc_verbose = false;
    lc->add_option("--p", lc_p, "First prime")->required();
    lc->add_option("--q", lc_q, "Second prime")->required();
    lc->add_option("--g", lc_g, "Common primitive root (default: smallest)");
    lc->add_option("--method", lc_method, "closed, gcd, bm or smatrix")
        ->check(CLI::IsMember({"closed", "gcd", "bm", "smatrix"}));
    lc->add_flag("--verbose", lc_verbose, "Also print classification details");
    lc->callback([&] { rc = run_lc(lc_p, lc_q, lc_g, lc_method, lc_verbose); });

    auto* verify = app.add_subcommand(
        "verify", "Cross-check methods over all pairs up to a bound");
    VerifyOptions vo;
    std::string verify_methods = "closed,gcd";
    verify->add_option("--max", vo.max, "Upper bound for both primes")->required();
    verify
        ->add_option("--methods", verify_methods,
                     "Comma-separated subset of closed,gcd,bm,smatrix")
        ->check([](const std::string& v) -> std::string {
            for (const auto& tok : split_methods(v)) {
                if (tok != "closed" && tok != "gcd" && tok != "bm" &&
                    tok != "smatrix")
                    return "unknown method: '" + tok + "'";
            }
            if (v.empty())
                return std::string("no methods given");
            return {};
        });
    verify->add_option("--seed", vo.seed,
                       "Pick common primitive roots from a seeded random scan");
    verify->add_option("--smatrix-max-degree", vo.smatrix_max_degree,
                       "Skip the smatrix method above this field degree");
    verify->callback([&] {
        vo.methods = split_methods(verify_methods);
        rc = run_verify(vo);
    });

    auto* table = app.add_subcommand("table", "Closed-form complexity table");
    uint64_t table_max = 0;
    std::string table_format = "csv";
    table->add_option("--max", table_max, "Upper bound for both primes")->required();
    table->add_option("--format", table_format, "csv, markdown or json")
        ->check(CLI::IsMember({"csv", "markdown", "json"}));
    table->callback([&] { rc = run_table(table_max, table_format); });

    auto* classify = app.add_subcommand("classify", "Residue classification of a pair");
    uint64_t cl_p = 0, cl_q = 0;
    classify->add_option("--p", cl_p, "First prime")->required();
    classify->add_option("--q", cl_q, "Second prime")->required();
    classify->callback([&] { rc = run_classify(cl_p, cl_q); });

    auto* seq = app.add_subcommand("seq", "Emit one period of the sequence");
    uint64_t seq_p = 0, seq_q = 0;
    std::optional<uint64_t> seq_g;
    std::string seq_format = "ascii";
    seq->add_option("--p", seq_p, "First prime")->required();
    seq->add_option("--q", seq_q, "Second prime")->required();
    seq->add_option("--g", seq_g, "Common primitive root (default: smallest)");
    seq->add_option("--format", seq_format, "ascii or packed")
        ->check(CLI::IsMember({"ascii", "packed"}));
    seq->callback([&] { rc = run_seq(seq_p, seq_q, seq_g, seq_format); });

    auto* minpoly = app.add_subcommand("minpoly", "Minimal polynomial as hex");
    uint64_t mp_p = 0, mp_q = 0;
    std::optional<uint64_t> mp_g;
    minpoly->add_option("--p", mp_p, "First prime")->required();
    minpoly->add_option("--q", mp_q, "Second prime")->required();
    minpoly->add_option("--g", mp_g, "Common primitive root (default: smallest)");
    minpoly->callback([&] { rc = run_minpoly(mp_p, mp_q, mp_g); });

    auto* smatrix = app.add_subcommand("smatrix", "Evaluation matrix over GF(2^m)");
    uint64_t sm_p = 0, sm_q = 0;
    std::optional<uint64_t> sm_g;
    smatrix->add_option("--p", sm_p, "First prime")->required();
    smatrix->add_option("--q", sm_q, "Second prime")->required();
    smatrix->add_option("--g", sm_g, "Common primitive root (default: smallest)");
    smatrix->callback([&] { rc = run_smatrix(sm_p, sm_q, sm_g); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
