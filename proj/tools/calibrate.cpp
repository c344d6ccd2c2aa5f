// Brute-force calibration of p-adic convergence valuations.
//
// Emits, as JSON on stdout, the exact error valuations v_p(approx_N - limit)
// for N = 1..5 over the acceptance grid (volkenborn: n <= 5, p in {2,3,5,7};
// fermionic: n <= 5, p in {3,5,7}). The output is committed as
// tests/fixtures/convergence_valuations.json and asserted against verbatim.

#include <nlohmann/json.hpp>

#include <iostream>

#include "zpsym/padic_integrals.hpp"

int main() {
    using nlohmann::ordered_json;
    constexpr unsigned n_levels = 5;
    constexpr unsigned long n_max = 5;

    auto table = [&](zpsym::integral_kind kind, const std::vector<unsigned long>& primes) {
        ordered_json rows = ordered_json::array();
        for (unsigned long n = 0; n <= n_max; ++n) {
            for (unsigned long p : primes) {
                ordered_json vals = ordered_json::array();
                for (const auto& [N, v] : zpsym::convergence_report(kind, n, p, n_levels)) {
                    (void)N;
                    if (v == zpsym::padic_infinity)
                        vals.push_back("inf");
                    else
                        vals.push_back(v);
                }
                rows.push_back(ordered_json{{"n", n}, {"p", p}, {"valuations", vals}});
            }
        }
        return rows;
    };

    ordered_json out{
        {"N_levels", n_levels},
        {"volkenborn", table(zpsym::integral_kind::volkenborn, {2, 3, 5, 7})},
        {"fermionic", table(zpsym::integral_kind::fermionic, {3, 5, 7})},
    };
    std::cout << out.dump(2) << "\n";
    return 0;
}
