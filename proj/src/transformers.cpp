#include "qmono/transformers.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "qmono/bitcodec.hpp"
#include "qmono/errors.hpp"

namespace qmono {

namespace {

nlohmann::json poly_json(const Polynomial& p) { return {{"coeffs", p.coeffs()}}; }

std::size_t slack_of(const Padding& sigma) {
    if (!sigma.slack) throw ConfigurationError("padding " + sigma.name + " has no declared slack constant");
    return *sigma.slack;
}

class IncreasingSession final : public Session {
public:
    IncreasingSession(std::unique_ptr<Session> inner, std::shared_ptr<const Padding> sigma, std::uint64_t P)
        : inner_(std::move(inner)), sigma_(std::move(sigma)), P_(P), floor_(P) {}

    Event step(std::optional<bool> answer) override {
        Event e = inner_->step(answer);
        if (!e.is_query()) return e;
        const BitString& raw = e.query_string();
        if (raw.size() > P_) {
            throw InternalConsistencyError("raw query of length " + std::to_string(raw.size()) +
                                           " exceeds the declared bound " + std::to_string(P_));
        }
        std::size_t iters = 0;
        BitString padded = iterate_pad_to_window(*sigma_, raw, floor_, &iters);
        floor_ = padded.size();
        return Event::query(std::move(padded), sat_add(e.work, iters));
    }

private:
    std::unique_ptr<Session> inner_;
    std::shared_ptr<const Padding> sigma_;
    std::uint64_t P_;
    std::uint64_t floor_;
};

class DecreasingSession final : public Session {
public:
    DecreasingSession(std::unique_ptr<Session> inner, std::shared_ptr<const Padding> sigma, std::uint64_t P,
                      std::uint64_t k)
        : inner_(std::move(inner)), sigma_(std::move(sigma)), P_(P), k_(k) {}

    Event step(std::optional<bool> answer) override {
        Event e = inner_->step(answer);
        if (!e.is_query()) return e;
        ++index_;
        if (index_ > P_) {
            throw InternalConsistencyError("more than P = " + std::to_string(P_) + " queries");
        }
        const BitString& raw = e.query_string();
        if (raw.size() > P_) {
            throw InternalConsistencyError("raw query of length " + std::to_string(raw.size()) +
                                           " exceeds the declared bound " + std::to_string(P_));
        }
        std::size_t iters = 0;
        BitString padded = iterate_pad_to_window(*sigma_, raw, decreasing_window_floor(P_, k_, index_), &iters);
        return Event::query(std::move(padded), sat_add(e.work, iters));
    }

private:
    std::unique_ptr<Session> inner_;
    std::shared_ptr<const Padding> sigma_;
    std::uint64_t P_;
    std::uint64_t k_;
    std::uint64_t index_ = 0;
};

class EqualLengthSession final : public Session {
public:
    EqualLengthSession(std::unique_ptr<Session> inner, std::uint64_t bound)
        : inner_(std::move(inner)), bound_(bound) {}

    Event step(std::optional<bool> answer) override {
        Event e = inner_->step(answer);
        if (!e.is_query()) return e;
        const BitString& w = e.query_string();
        if (w.size() > bound_) {
            throw InternalConsistencyError("query of length " + std::to_string(w.size()) + " exceeds q(|x|) = " +
                                           std::to_string(bound_));
        }
        return Event::query(at_length_with_rank_of(w, bound_ + 1), sat_add(e.work, bound_ + 1));
    }

private:
    std::unique_ptr<Session> inner_;
    std::uint64_t bound_;
};

class OneQuerySession final : public Session {
public:
    OneQuerySession(std::unique_ptr<Session> inner, std::shared_ptr<const SparseOracle> c, std::optional<std::uint64_t> k,
                    std::size_t cap)
        : inner_(std::move(inner)), c_(std::move(c)), k_(k), cap_(cap) {}

    Event step(std::optional<bool> answer) override {
        std::uint64_t local = 0;
        for (;;) {
            Event e = inner_->step(answer);
            const std::uint64_t own = e.work;
            e.work = sat_add(own, local);
            if (!e.is_query()) return e;
            const BitString& q = e.query_string();
            const std::uint64_t len = q.size();
            const bool supported = std::binary_search(c_->support.begin(), c_->support.end(), len);
            if (!supported) {
                answer = false;
            } else if (k_ && len == *k_) {
                if (forwarded_) throw InternalConsistencyError("a second query of length k = " + std::to_string(len));
                forwarded_ = true;
                return e;
            } else if (k_ && len < *k_) {
                if (len > cap_) {
                    throw ResourceError("local decision at length " + std::to_string(len) + " exceeds cap " +
                                        std::to_string(cap_));
                }
                answer = c_->local_decide(q);
            } else {
                throw InternalConsistencyError("query of length " + std::to_string(len) + " beyond q(|x|)");
            }
            local = sat_add(local, sat_add(own, 1));
        }
    }

private:
    std::unique_ptr<Session> inner_;
    std::shared_ptr<const SparseOracle> c_;
    std::optional<std::uint64_t> k_;
    std::size_t cap_;
    bool forwarded_ = false;
};

class ConstantSession final : public Session {
public:
    explicit ConstantSession(bool verdict) : verdict_(verdict) {}
    Event step(std::optional<bool>) override { return Event::halt(verdict_); }

private:
    bool verdict_;
};

} // namespace

std::uint64_t decreasing_window_floor(std::uint64_t P, std::uint64_t k, std::uint64_t i) {
    return sat_add(P, sat_mul(P - i, k + 1));
}

OracleMachine to_query_increasing(const OracleMachine& m, const Padding& sigma, std::optional<Polynomial> p) {
    const std::uint64_t k = slack_of(sigma);
    const Polynomial bound = p ? *p : m.budget().bound;
    const Polynomial& B = m.budget().bound;
    // Padding iterations are charged as work: query i needs at most p + i*k.
    StepBudget budget = StepBudget::of(B + B * (bound + B * Polynomial::constant(k)));
    auto inner = std::make_shared<const OracleMachine>(m);
    auto pad = std::make_shared<const Padding>(sigma);
    return OracleMachine(
        "increasing(" + m.name() + "," + sigma.name + ")", std::move(budget),
        [inner, pad, bound](const BitString& x) -> std::unique_ptr<Session> {
            const std::uint64_t P = bound(x.size());
            if (P < x.size()) {
                throw ConfigurationError("to_query_increasing: p(|x|) = " + std::to_string(P) + " is below |x| = " +
                                         std::to_string(x.size()));
            }
            return std::make_unique<IncreasingSession>(inner->start(x), pad, P);
        },
        {{"kind", "transform"}, {"transform", "increasing"}, {"machine", m.spec()}, {"padding", sigma.name},
         {"p", poly_json(bound)}});
}

OracleMachine to_query_decreasing(const OracleMachine& m, const Padding& sigma, std::optional<Polynomial> p) {
    const std::uint64_t k = slack_of(sigma);
    const Polynomial bound = p ? *p : m.budget().bound;
    const Polynomial& B = m.budget().bound;
    StepBudget budget = StepBudget::of(B + B * bound * Polynomial::constant(k + 2));
    auto inner = std::make_shared<const OracleMachine>(m);
    auto pad = std::make_shared<const Padding>(sigma);
    return OracleMachine(
        "decreasing(" + m.name() + "," + sigma.name + ")", std::move(budget),
        [inner, pad, bound, k](const BitString& x) -> std::unique_ptr<Session> {
            return std::make_unique<DecreasingSession>(inner->start(x), pad, bound(x.size()), k);
        },
        {{"kind", "transform"}, {"transform", "decreasing"}, {"machine", m.spec()}, {"padding", sigma.name},
         {"p", poly_json(bound)}});
}

EqualLength to_equal_length(const OracleMachine& m, const OracleHandle& b, const Polynomial& q,
                            const BitString& non_member) {
    if (b(non_member)) throw ConfigurationError("to_equal_length: \"" + non_member.str() + "\" is a member of B");
    OracleHandle z([b](const BitString& y) { return tight_equivalent_member(b, y); },
                       {{"kind", "tight-equiv"}, {"inner", b.spec()}, {"nonMember", non_member.str()}});
    StringMap z_to_b = [non_member](const BitString& y) {
        if (y.all_one()) return non_member;
        return unrank_rank_at_length(y);
    };
    OracleMachine m1 = equal_length_machine(m, q);
    return EqualLength{std::move(z), std::move(m1), std::move(z_to_b)};
}

OracleMachine equal_length_machine(const OracleMachine& m, const Polynomial& q) {
    const Polynomial& B = m.budget().bound;
    auto inner = std::make_shared<const OracleMachine>(m);
    return OracleMachine(
        "equal-length(" + m.name() + ")", StepBudget::of(B + B * (q + Polynomial::constant(1))),
        [inner, q](const BitString& x) { return std::make_unique<EqualLengthSession>(inner->start(x), q(x.size())); },
        {{"kind", "transform"}, {"transform", "equal-length"}, {"machine", m.spec()}, {"q", poly_json(q)}});
}

bool triple_log_gap(std::uint64_t a, std::uint64_t b) {
    if (b < 2) return false;
    const double l1 = std::log2(static_cast<double>(b));
    if (l1 <= 1.0) return false;
    const double l2 = std::log2(l1);
    if (l2 <= 1.0) return a == 0 && l2 >= 1.0;
    return static_cast<double>(a) <= std::log2(l2);
}

WideSpacedLengths WideSpacedLengths::make(std::vector<std::uint64_t> values,
                                          std::function<bool(std::uint64_t, std::uint64_t)> gap_ok,
                                          std::string gap_name) {
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] <= values[i - 1]) throw ConfigurationError("length sequence must be strictly increasing");
        if (!gap_ok(values[i - 1], values[i])) {
            throw ConfigurationError("lengths " + std::to_string(values[i - 1]) + " and " + std::to_string(values[i]) +
                                     " violate the spacing " + gap_name);
        }
    }
    return WideSpacedLengths{std::move(values), std::move(gap_ok), std::move(gap_name)};
}

WideSpacedLengths WideSpacedLengths::increasing(std::vector<std::uint64_t> values) {
    return make(std::move(values), [](std::uint64_t a, std::uint64_t b) { return a < b; }, "increasing");
}

WideSpacedLengths WideSpacedLengths::tower() { return make({16}, triple_log_gap, "a <= log log log b"); }

SparseOracle sparse_encode(const OracleHandle& b, const Polynomial& p, const WideSpacedLengths& lengths) {
    std::vector<std::uint64_t> support;
    for (auto m : lengths.values) support.push_back(sat_add(p(m), 1));
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    auto decide = [b, support](const BitString& y) {
        if (!std::binary_search(support.begin(), support.end(), y.size())) return false;
        return tight_equivalent_member(b, y);
    };
    nlohmann::json spec = {{"kind", "sparse"}, {"inner", b.spec()}, {"p", poly_json(p)}, {"lengths", lengths.values}};
    return SparseOracle{OracleHandle(decide, std::move(spec)), support, decide};
}

SparseOracle sparse_oracle(OracleHandle oracle, std::vector<std::uint64_t> support) {
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    auto local = [oracle](const BitString& y) { return oracle(y); };
    return SparseOracle{std::move(oracle), std::move(support), std::move(local)};
}

OracleMachine one_query_transform(const OracleMachine& m0, const SparseOracle& c, const Polynomial& q,
                                  std::size_t local_len_cap) {
    auto inner = std::make_shared<const OracleMachine>(m0);
    auto sparse = std::make_shared<const SparseOracle>(c);
    return OracleMachine(
        "one-query(" + m0.name() + ")", m0.budget(),
        [inner, sparse, q, local_len_cap](const BitString& x) {
            const std::uint64_t limit = q(x.size());
            std::optional<std::uint64_t> k;
            for (auto l : sparse->support) {
                if (l <= limit) k = l;
            }
            return std::make_unique<OneQuerySession>(inner->start(x), sparse, k, local_len_cap);
        },
        {{"kind", "transform"}, {"transform", "one-query"}, {"machine", m0.spec()}, {"oracle", c.oracle.spec()},
         {"support", c.support}, {"q", poly_json(q)}});
}

std::string to_string(ConnectiveClassKind k) {
    switch (k) {
    case ConnectiveClassKind::completely_degenerate: return "completely-degenerate";
    case ConnectiveClassKind::almost_completely_degenerate: return "almost-completely-degenerate";
    case ConnectiveClassKind::essential: return "essential";
    }
    return "essential";
}

ConnectiveClass classify_connective(const ConnectiveTable& table) {
    ConnectiveClass c;
    c.table = table;
    const std::size_t size = table.outputs.size();
    for (unsigned j = 0; j < table.arity; ++j) {
        const std::size_t bit = std::size_t{1} << (table.arity - 1 - j);
        for (std::size_t idx = 0; idx < size; ++idx) {
            if (table.outputs[idx] != table.outputs[idx ^ bit]) {
                c.relevant.push_back(j);
                break;
            }
        }
    }
    c.kind = c.relevant.empty()       ? ConnectiveClassKind::completely_degenerate
             : c.relevant.size() == 1 ? ConnectiveClassKind::almost_completely_degenerate
                                      : ConnectiveClassKind::essential;
    return c;
}

OracleMachine degenerate_ftt_to_monotonic(const TruthTableMachine& t) {
    if (!t.fixed_table) throw ConfigurationError(t.name + " does not use a fixed truth table");
    const ConnectiveClass cls = classify_connective(*t.fixed_table);
    if (cls.kind == ConnectiveClassKind::essential) {
        throw ConfigurationError(t.name + ": table depends on more than one answer");
    }
    nlohmann::json spec = {{"kind", "ftt-monotonic"}, {"machine", t.name}};
    if (cls.kind == ConnectiveClassKind::completely_degenerate) {
        const bool verdict = cls.table.outputs[0];
        return OracleMachine("monotonic(" + t.name + ")", t.budget,
                             [verdict](const BitString&) { return std::make_unique<ConstantSession>(verdict); },
                             std::move(spec));
    }
    const unsigned j = cls.relevant[0];
    const ConnectiveTable table = cls.table;
    auto generator = t.generator;
    return script_machine("monotonic(" + t.name + ")", t.budget,
                          [generator, table, j](const BitString& x, const std::vector<bool>& a) {
                              if (a.empty()) {
                                  const auto qs = generator(x);
                                  if (qs.size() != table.arity) {
                                      throw InternalConsistencyError("generator returned " + std::to_string(qs.size()) +
                                                                     " queries for an arity-" +
                                                                     std::to_string(table.arity) + " table");
                                  }
                                  return Event::query(qs[j]);
                              }
                              std::vector<bool> answers(table.arity, false);
                              answers[j] = a[0];
                              return Event::halt(table(answers));
                          })
        .with_spec(std::move(spec));
}

} // namespace qmono
