#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qweyl/freealg/element.hpp"

namespace qweyl::freealg {

struct Generator {
    std::string name;
    int weight = 1;
    // Larger precedence sorts later in the degree-lexicographic order.
    int precedence = 0;
};

// Weighted degree first, then lexicographic from the left by precedence.
class MonomialOrder {
public:
    MonomialOrder() = default;
    explicit MonomialOrder(const std::vector<Generator>& gens);

    long weight(const Word& w) const;
    bool less(const Word& a, const Word& b) const;

private:
    std::vector<int> weights_;
    std::vector<int> precedence_;
};

struct RewriteRule {
    Word lhs;
    Element rhs;
    std::string label;
};

// A relation as displayed in the source, lhs = rhs. Rules are the
// oriented generators of the ideal; displayed relations are what suites
// check and reports echo.
struct Relation {
    std::string label;
    Element lhs;
    Element rhs;
};

constexpr std::size_t kDefaultStepLimit = 1'000'000;

class Presentation {
public:
    Presentation(std::string name, std::vector<Generator> gens);

    const std::string& name() const { return name_; }
    const std::vector<Generator>& generators() const { return gens_; }
    std::size_t generator_count() const { return gens_.size(); }
    const std::string& generator_name(GenId g) const { return gens_.at(g).name; }
    std::optional<GenId> find_generator(std::string_view name) const;
    GenId id(std::string_view name) const;  // throws BadParams if unknown
    Element gen(std::string_view name) const { return Element::generator(id(name)); }
    Word word(std::initializer_list<std::string_view> names) const;

    const MonomialOrder& order() const { return order_; }

    // Throws BadRule if some rhs word is not strictly below lhs, or the lhs
    // is already used.
    void add_rule(const Word& lhs, const Element& rhs, std::string label = {});
    // Convenience: lhs given as the leading word of `relation` (coefficient
    // must be a unit); the rule is the relation solved for that word.
    void add_rule_from_relation(const Element& relation, std::string label = {});
    const std::vector<RewriteRule>& rules() const { return rules_; }
    // Rule indices whose lhs starts with g.
    const std::vector<std::size_t>& rules_starting_with(GenId g) const { return by_first_[g]; }
    std::size_t max_lhs_length() const;

    void add_relation(std::string label, Element lhs, Element rhs);
    const std::vector<Relation>& relations() const { return relations_; }

    // Antilinear antimultiplicative involution, given by generator images.
    void set_star(std::vector<Element> images);
    bool has_star() const { return star_.has_value(); }
    const std::vector<Element>& star_images() const;

    // g and g_inv are declared inverse so the grammar accepts g^-n.
    void add_inverse_pair(GenId g, GenId g_inv);
    std::optional<GenId> inverse_of(GenId g) const;

    std::size_t step_limit() const { return step_limit_; }
    void set_step_limit(std::size_t n) { step_limit_ = n; }

    // Leading word of a nonzero element in this order.
    Word leading_word(const Element& e) const;

private:
    std::string name_;
    std::vector<Generator> gens_;
    MonomialOrder order_;
    std::vector<RewriteRule> rules_;
    std::vector<std::vector<std::size_t>> by_first_;
    std::vector<Relation> relations_;
    std::optional<std::vector<Element>> star_;
    std::map<GenId, GenId> inverses_;
    std::size_t step_limit_;
};

using PresentationPtr = std::shared_ptr<const Presentation>;

// Reads QWEYL_STEP_LIMIT, falling back to kDefaultStepLimit.
std::size_t default_step_limit();

}  // namespace qweyl::freealg
