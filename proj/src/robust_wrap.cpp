#include "qmono/robust_wrap.hpp"

#include <deque>
#include <memory>

#include "qmono/bitcodec.hpp"
#include "qmono/errors.hpp"

namespace qmono {

std::optional<EscapeRoute> find_escape_route(const Constraint& c, const BitString& x,
                                             const std::vector<BitString>& prefix, std::size_t r, std::size_t cap) {
    if (r >= 62) throw ResourceError("escape-route bound r = " + std::to_string(r) + " is beyond exhaustive search");
    const std::uint64_t alphabet = (std::uint64_t{2} << r) - 1; // strings of length <= r
    std::size_t examined = 0;
    std::vector<BitString> tuple = prefix;
    for (std::size_t t = 0; t <= r; ++t) {
        std::vector<std::uint64_t> slot(t, 0);
        tuple.resize(prefix.size() + t);
        for (std::size_t i = 0; i < t; ++i) tuple[prefix.size() + i] = BitString();
        for (;;) {
            if (++examined > cap) {
                throw ResourceError("escape-route search exceeded its cap of " + std::to_string(cap) + " candidates");
            }
            if (c.allows(x, tuple)) {
                return EscapeRoute{std::vector<BitString>(tuple.begin() + static_cast<std::ptrdiff_t>(prefix.size()),
                                                          tuple.end()),
                                   r};
            }
            // Odometer with the last slot least significant.
            bool advanced = false;
            for (std::size_t i = t; i-- > 0;) {
                if (++slot[i] < alphabet) {
                    tuple[prefix.size() + i] = lex_unrank({slot[i] + 1});
                    advanced = true;
                    break;
                }
                slot[i] = 0;
                tuple[prefix.size() + i] = BitString();
            }
            if (!advanced) break;
        }
    }
    return std::nullopt;
}

namespace {

class PrefixCheckedSession final : public Session {
public:
    PrefixCheckedSession(std::unique_ptr<Session> inner, Constraint c, BitString x)
        : inner_(std::move(inner)), c_(std::move(c)), x_(std::move(x)) {}

    Event step(std::optional<bool> answer) override {
        Event e = inner_->step(answer);
        if (!e.is_query()) return e;
        asked_.push_back(e.query_string());
        if (!c_.allows(x_, asked_)) return Event::reject(e.work);
        return e;
    }

private:
    std::unique_ptr<Session> inner_;
    Constraint c_;
    BitString x_;
    std::vector<BitString> asked_;
};

class EscapeRoutedSession final : public Session {
public:
    EscapeRoutedSession(std::unique_ptr<Session> inner, Constraint c, BitString x, std::size_t r, std::size_t cap)
        : inner_(std::move(inner)), c_(std::move(c)), x_(std::move(x)), r_(r), cap_(cap) {}

    Event step(std::optional<bool> answer) override {
        if (draining_) return drain();
        Event e = inner_->step(answer);
        if (e.is_query()) {
            auto extended = asked_;
            extended.push_back(e.query_string());
            if (find_escape_route(c_, x_, extended, r_, cap_)) {
                asked_ = std::move(extended);
                return e;
            }
            begin_drain(false);
        } else {
            begin_drain(e.accepts());
        }
        return drain();
    }

private:
    void begin_drain(bool verdict) {
        const auto route = find_escape_route(c_, x_, asked_, r_, cap_);
        if (!route) {
            throw InternalConsistencyError("escape-routed wrapper lost its route on input \"" + x_.str() + "\"");
        }
        pending_.assign(route->extension.begin(), route->extension.end());
        verdict_ = verdict;
        draining_ = true;
    }

    Event drain() {
        if (pending_.empty()) return Event::halt(verdict_);
        BitString q = std::move(pending_.front());
        pending_.pop_front();
        asked_.push_back(q);
        return Event::query(std::move(q));
    }

    std::unique_ptr<Session> inner_;
    Constraint c_;
    BitString x_;
    std::size_t r_;
    std::size_t cap_;
    std::vector<BitString> asked_;
    std::deque<BitString> pending_;
    bool verdict_ = false;
    bool draining_ = false;
};

} // namespace

OracleMachine wrap_prefix_checked(const OracleMachine& m, const Constraint& c) {
    if (!c.prefix_closed()) {
        throw ConfigurationError("wrap_prefix_checked: constraint " + c.name() + " is not declared prefix-closed");
    }
    auto inner = std::make_shared<const OracleMachine>(m);
    return OracleMachine("prefix-checked(" + m.name() + "," + c.name() + ")", m.budget(),
                         [inner, c](const BitString& x) {
                             return std::make_unique<PrefixCheckedSession>(inner->start(x), c, x);
                         },
                         {{"kind", "wrap-prefix"}, {"inner", m.spec()}, {"constraint", c.name()}});
}

OracleMachine wrap_escape_routed(const OracleMachine& m, const Constraint& c, const Polynomial& p, std::size_t cap) {
    auto inner = std::make_shared<const OracleMachine>(m);
    // A route adds at most p(|x|) queries beyond the inner machine's events.
    StepBudget budget = StepBudget::of(m.budget().bound + p + Polynomial::constant(1));
    nlohmann::json pc = {{"coeffs", p.coeffs()}};
    return OracleMachine("escape-routed(" + m.name() + "," + c.name() + ")", std::move(budget),
                         [inner, c, p, cap](const BitString& x) {
                             return std::make_unique<EscapeRoutedSession>(inner->start(x), c, x, p(x.size()), cap);
                         },
                         {{"kind", "wrap-escape"}, {"inner", m.spec()}, {"constraint", c.name()}, {"p", pc}});
}

std::optional<Constraint> constraint_fixture(const std::string& name) {
    if (name == "pair-0-11") {
        return Constraint::custom(
            name,
            [](const BitString&, std::span<const BitString> qs) {
                return qs.empty() || (qs.size() == 2 && qs[0] == "0"_bits && qs[1] == "11"_bits);
            },
            false);
    }
    if (name == "singleton") {
        return Constraint::custom(name, [](const BitString&, std::span<const BitString> qs) { return qs.empty(); },
                                  false);
    }
    if (name == "even-short") {
        return Constraint::custom(
            name,
            [](const BitString&, std::span<const BitString> qs) {
                if (qs.size() % 2 != 0) return false;
                for (const auto& q : qs) {
                    if (q.size() > 1) return false;
                }
                return true;
            },
            false);
    }
    return std::nullopt;
}

std::vector<std::string> constraint_fixture_names() { return {"pair-0-11", "singleton", "even-short"}; }

std::optional<Constraint> constraint_by_name(const std::string& name) {
    if (const auto k = parse_constraint_kind(name)) return Constraint(*k);
    return constraint_fixture(name);
}

} // namespace qmono
