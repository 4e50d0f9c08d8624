#include "qmono/catalog.hpp"

#include <functional>
#include <map>

namespace qmono {

namespace {

using Probes = std::function<std::vector<BitString>(std::size_t n)>;

// Asks the probes in order, then 0^prefix followed by the answers; accepts
// iff that last query is answered yes. Inputs outside `shape` are rejected
// without a query.
OracleMachine sweep_prober(std::string name, unsigned exponent, std::function<bool(std::size_t)> shape,
                           Probes probes, std::function<std::size_t(std::size_t)> prefix) {
    return script_machine(std::move(name), StepBudget::exponent_form(exponent),
                          [shape, probes, prefix](const BitString& x, const std::vector<bool>& a) {
                              const std::size_t n = x.size();
                              if (!x.all_zero() || !shape(n)) return Event::reject();
                              const auto ps = probes(n);
                              if (a.size() < ps.size()) return Event::query(ps[a.size()]);
                              if (a.size() == ps.size()) {
                                  BitString q = BitString::zeros(prefix(n));
                                  for (bool b : a) q.push_back(b);
                                  return Event::query(std::move(q));
                              }
                              return Event::halt(a.back());
                          });
}

// Asks 0^m and 1^m for the length m = target(n) and accepts on exactly one yes.
OracleMachine xor_prober(std::string name, unsigned exponent, std::function<bool(std::size_t)> shape,
                         std::function<std::size_t(std::size_t)> target) {
    return script_machine(std::move(name), StepBudget::exponent_form(exponent),
                          [shape, target](const BitString& x, const std::vector<bool>& a) {
                              const std::size_t n = x.size();
                              if (!x.all_zero() || !shape(n)) return Event::reject();
                              const std::size_t m = target(n);
                              if (a.empty()) return Event::query(BitString::zeros(m));
                              if (a.size() == 1) return Event::query(BitString::ones(m));
                              return Event::halt(a[0] != a[1]);
                          });
}

// Asks a single string and echoes the answer.
OracleMachine single_prober(std::string name, unsigned exponent, std::function<bool(std::size_t)> shape,
                            std::function<BitString(std::size_t)> target) {
    return script_machine(std::move(name), StepBudget::exponent_form(exponent),
                          [shape, target](const BitString& x, const std::vector<bool>& a) {
                              if (!x.all_zero() || !shape(x.size())) return Event::reject();
                              if (a.empty()) return Event::query(target(x.size()));
                              return Event::halt(a[0]);
                          });
}

bool pow4(std::size_t n) { return is_positive_power(n, 4); }
bool pow8(std::size_t n) { return is_positive_power(n, 8); }
bool mult4(std::size_t n) { return n >= 4 && n % 4 == 0; }
bool four_k3(std::size_t n) { return n >= 7 && n % 4 == 3; }
bool nonempty(std::size_t n) { return n >= 1; }

OracleMachine double_sweep_prober() {
    return script_machine("double-sweep-probe", StepBudget::exponent_form(1),
                          [](const BitString& x, const std::vector<bool>& a) {
                              const std::size_t n = x.size();
                              if (!x.all_zero() || !pow4(n)) return Event::reject();
                              const std::size_t c = n / 4;
                              if (a.size() < c) return Event::query(BitString::zeros(n - 1 - a.size()));
                              if (a.size() < 2 * c) return Event::query(BitString::zeros(n + 1 + (a.size() - c)));
                              auto word = [&](std::size_t prefix, std::size_t from) {
                                  BitString w = BitString::zeros(prefix);
                                  for (std::size_t j = from; j < from + c; ++j) w.push_back(a[j]);
                                  return w;
                              };
                              if (a.size() == 2 * c) return Event::query(word(n / 4, 0));
                              if (a.size() == 2 * c + 1) return Event::query(word(5 * n / 4, c));
                              return Event::halt(a[2 * c] != a[2 * c + 1]);
                          });
}

const std::map<std::string, std::function<OracleMachine()>>& registry() {
    static const std::map<std::string, std::function<OracleMachine()>> r = {
        {"accept-all",
         [] {
             return script_machine("accept-all", StepBudget::exponent_form(1),
                                   [](const BitString&, const std::vector<bool>&) { return Event::accept(); });
         }},
        {"reject-all",
         [] {
             return script_machine("reject-all", StepBudget::exponent_form(1),
                                   [](const BitString&, const std::vector<bool>&) { return Event::reject(); });
         }},
        {"xor-probe", [] { return xor_prober("xor-probe", 2, nonempty, [](std::size_t n) { return n; }); }},
        {"zero-probe",
         [] { return single_prober("zero-probe", 1, nonempty, [](std::size_t n) { return BitString::zeros(n); }); }},
        {"one-probe",
         [] { return single_prober("one-probe", 1, nonempty, [](std::size_t n) { return BitString::ones(n); }); }},
        {"increasing-chain",
         [] {
             // 0^(n+1) then 0^(n+2); accepts iff both are members.
             return script_machine("increasing-chain", StepBudget::exponent_form(3),
                                   [](const BitString& x, const std::vector<bool>& a) {
                                       if (a.size() < 2) return Event::query(BitString::zeros(x.size() + 1 + a.size()));
                                       return Event::halt(a[0] && a[1]);
                                   });
         }},
        {"double-sweep-probe", double_sweep_prober},
        {"mirror-probe",
         [] {
             return sweep_prober(
                 "mirror-probe", 1, pow8, [](std::size_t n) { return descending_zero_run(n, n / 8); },
                 [](std::size_t n) { return 5 * n / 8; });
         }},
        {"mirror-up-probe",
         [] {
             return sweep_prober(
                 "mirror-up-probe", 1, pow8, [](std::size_t n) { return ascending_zero_run(n, n / 8); },
                 [](std::size_t n) { return 9 * n / 8; });
         }},
        {"sweep-down-probe",
         [] {
             return sweep_prober(
                 "sweep-down-probe", 1, pow4, [](std::size_t n) { return descending_zero_run(n, n / 4); },
                 [](std::size_t n) { return n / 4; });
         }},
        {"sweep-up-probe",
         [] {
             return sweep_prober(
                 "sweep-up-probe", 1, pow4, [](std::size_t n) { return ascending_zero_run(n, n / 4); },
                 [](std::size_t n) { return 5 * n / 4; });
         }},
        {"shift-up-probe",
         [] {
             return single_prober("shift-up-probe", 1, mult4, [](std::size_t n) { return BitString::zeros(n + 1); });
         }},
        {"xor-4k2-probe", [] { return xor_prober("xor-4k2-probe", 1, four_k3, [](std::size_t n) { return n - 1; }); }},
        {"shift-down-probe",
         [] {
             return single_prober("shift-down-probe", 1, four_k3,
                                  [](std::size_t n) { return BitString::zeros(n - 1); });
         }},
        {"xor-4k1-probe", [] { return xor_prober("xor-4k1-probe", 1, mult4, [](std::size_t n) { return n + 1; }); }},
        {"zero-one-probe",
         [] {
             // Asks "0" then "1" on every input; accepts on exactly one yes.
             return script_machine("zero-one-probe", StepBudget::exponent_form(3),
                                   [](const BitString&, const std::vector<bool>& a) {
                                       if (a.empty()) return Event::query("0"_bits);
                                       if (a.size() == 1) return Event::query("1"_bits);
                                       return Event::halt(a[0] != a[1]);
                                   });
         }},
        {"adaptive-walk",
         [] {
             // Asks x, then x extended by the answer bit; echoes the second answer.
             return script_machine("adaptive-walk", StepBudget::exponent_form(3),
                                   [](const BitString& x, const std::vector<bool>& a) {
                                       if (a.empty()) return Event::query(x);
                                       if (a.size() == 1) return Event::query(BitString(x).push_back(a[0]));
                                       return Event::halt(a[1]);
                                   });
         }},
        {"length-ladder",
         [] {
             // One query at each length 1..|x|+3: 0^(j-1) followed by the parity
             // of the answers so far. Accepts iff the final parity is odd.
             return script_machine("length-ladder", StepBudget::exponent_form(4),
                                   [](const BitString& x, const std::vector<bool>& a) {
                                       bool parity = false;
                                       for (bool b : a) parity ^= b;
                                       if (a.size() < x.size() + 3) {
                                           return Event::query(BitString::zeros(a.size()).push_back(parity));
                                       }
                                       return Event::halt(parity);
                                   });
         }},
    };
    return r;
}

std::vector<BitString> zero_one_pair(const BitString& x) {
    return {BitString::zeros(x.size()), BitString::ones(x.size())};
}

const std::map<std::string, std::function<TruthTableMachine()>>& tt_registry() {
    static const std::map<std::string, std::function<TruthTableMachine()>> r = {
        {"parity-tt",
         [] { return fixed_table_machine("parity-tt", StepBudget::exponent_form(3), zero_one_pair, parity_table(2)); }},
        {"first-projection-tt",
         [] {
             return fixed_table_machine("first-projection-tt", StepBudget::exponent_form(3), zero_one_pair,
                                        projection_table(2, 0));
         }},
        {"constant-true-tt",
         [] {
             return fixed_table_machine("constant-true-tt", StepBudget::exponent_form(3), zero_one_pair,
                                        constant_table(2, true));
         }},
        {"mirror-tt",
         [] {
             // On 0^(8^k): the descending run 0^(n-1)..0^(7n/8), then 0^(3n/4) and
             // 0^(5n/4). Accepts iff 0^(3n/4) is a member.
             TruthTableMachine t;
             t.name = "mirror-tt";
             t.budget = StepBudget::exponent_form(1);
             t.generator = [](const BitString& x) {
                 const std::size_t n = x.size();
                 if (!x.all_zero() || !pow8(n)) return std::vector<BitString>{};
                 auto qs = descending_zero_run(n, n / 8);
                 qs.push_back(BitString::zeros(3 * n / 4));
                 qs.push_back(BitString::zeros(5 * n / 4));
                 return qs;
             };
             t.evaluator = [](const BitString& x, const std::vector<bool>& a) {
                 return !a.empty() && x.all_zero() && a[a.size() - 2];
             };
             return t;
         }},
    };
    return r;
}

} // namespace

std::optional<OracleMachine> catalog_machine(const std::string& name) {
    const auto& r = registry();
    const auto it = r.find(name);
    if (it == r.end()) return std::nullopt;
    return it->second();
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> out;
    for (const auto& [name, _] : registry()) out.push_back(name);
    return out;
}

std::optional<TruthTableMachine> catalog_tt_machine(const std::string& name) {
    const auto& r = tt_registry();
    const auto it = r.find(name);
    if (it == r.end()) return std::nullopt;
    return it->second();
}

std::vector<std::string> catalog_tt_names() {
    std::vector<std::string> out;
    for (const auto& [name, _] : tt_registry()) out.push_back(name);
    return out;
}

OracleMachine test_language_prober(TestLanguageKind kind) {
    switch (kind) {
    case TestLanguageKind::xor_pair: return *catalog_machine("xor-probe");
    case TestLanguageKind::double_sweep: return *catalog_machine("double-sweep-probe");
    case TestLanguageKind::mirror: return *catalog_machine("mirror-probe");
    case TestLanguageKind::sweep_down: return *catalog_machine("sweep-down-probe");
    case TestLanguageKind::sweep_up: return *catalog_machine("sweep-up-probe");
    case TestLanguageKind::shift_up_4k1: return *catalog_machine("shift-up-probe");
    case TestLanguageKind::xor_4k2: return *catalog_machine("xor-4k2-probe");
    case TestLanguageKind::shift_down_4k2: return *catalog_machine("shift-down-probe");
    case TestLanguageKind::xor_4k1: return *catalog_machine("xor-4k1-probe");
    }
    return *catalog_machine("reject-all");
}

} // namespace qmono
