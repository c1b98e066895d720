#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace rho {

// Canonical element encoding, per kind:
//   cyclic(n):       [a]           0 <= a < n
//   dihedral(n):     [a, b]        r^a s^b, 0 <= a < n, b in {0,1}
//   free-abelian(n): [x1..xn]
//   free(k):         reduced word, letters +-1..+-k
//   finite-table(n): [i]           index into the table
using Elt = std::vector<int>;

// shortlex: by word length, then by encoding
struct EltOrder {
    const class Group* g;
    bool operator()(const Elt& a, const Elt& b) const;
};

class Group {
  public:
    virtual ~Group() = default;

    virtual std::string kind() const = 0;
    virtual bool is_finite() const = 0;
    virtual Elt id() const = 0;
    virtual Elt mul(const Elt& a, const Elt& b) const = 0;
    virtual Elt inv(const Elt& a) const = 0;
    virtual int length(const Elt& a) const = 0;

    // all elements with length <= R, shortlex sorted
    virtual std::vector<Elt> ball(int R) const = 0;

    virtual std::string print(const Elt& a) const = 0;
    virtual Elt parse(const std::string& s) const = 0;

    // finite kinds only; throws for infinite ones
    std::vector<Elt> elements() const;

    bool is_id(const Elt& a) const { return a == id(); }
    Elt conj(const Elt& c, const Elt& x) const {
        return mul(mul(c, x), inv(c));
    }
    Elt commutator(const Elt& a, const Elt& b) const {
        return mul(mul(a, b), mul(inv(a), inv(b)));
    }

    bool shortlex_less(const Elt& a, const Elt& b) const;
};

std::unique_ptr<Group> make_cyclic(int n);
std::unique_ptr<Group> make_dihedral(int n);
std::unique_ptr<Group> make_free_abelian(int rank);
std::unique_ptr<Group> make_free(int rank);
// table[i][j] = index of (element i * element j); row/col 0 must be the identity
std::unique_ptr<Group> make_table_group(const std::vector<std::vector<int>>& table);

// S3 as a finite-table fixture (permutations of 3 points, index order
// fixed); used by tests and shipped run configs.
std::unique_ptr<Group> make_symmetric3();

// Conjugacy class data, complete for finite kinds, ball-restricted otherwise.
struct ConjClass {
    Elt rep;                      // shortlex-minimal member seen
    std::vector<Elt> members;     // shortlex sorted
    std::map<Elt, Elt> conjugator;  // m -> c with c rep c^{-1} = m, c shortlex-minimal found
    bool complete = false;
};

// For infinite kinds, members of length <= R (conjugators searched in a
// ball of radius R + length(x)).
ConjClass conjugacy_class(const Group& g, const Elt& x, int R);

// decidable for every kind (cyclic words for free groups)
bool conjugate_in(const Group& g, const Elt& a, const Elt& b);

// All classes of a finite group, reps shortlex ordered.
std::vector<ConjClass> conjugacy_classes(const Group& g);

// Elements of the centralizer of x with length <= R, shortlex sorted.
std::vector<Elt> centralizer_ball(const Group& g, const Elt& x, int R);

// The centralizer as a group in its own right, for finite kinds: returned
// as a finite-table group plus the embedding of its elements.
struct Subgroup {
    std::unique_ptr<Group> table;   // finite-table model
    std::vector<Elt> embedding;     // table index -> parent element
};
Subgroup centralizer_group(const Group& g, const Elt& x);

// Quotient of a finite subgroup table by the cyclic normal subgroup <x>;
// x given as parent element, must centralize (used for Gamma_x / x^Z).
Subgroup quotient_by_central_cyclic(const Group& parent, const Subgroup& sub, const Elt& x);

}  // namespace rho
