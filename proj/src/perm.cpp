#include "char2/perm.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace char2 {

Perm perm_identity(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm perm_mul(const Perm& a, const Perm& b) {
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
    return r;
}

Perm perm_inv(const Perm& a) {
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<int>(i);
    return r;
}

int perm_order(const Perm& a) {
    int n = static_cast<int>(a.size());
    std::vector<char> seen(n, 0);
    long long ord = 1;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = 1;
            j = a[j];
            ++len;
        }
        ord = std::lcm(ord, static_cast<long long>(len));
    }
    return static_cast<int>(ord);
}

bool perm_valid(const Perm& a) {
    int n = static_cast<int>(a.size());
    std::vector<char> hit(n, 0);
    for (int v : a) {
        if (v < 0 || v >= n || hit[v]) return false;
        hit[v] = 1;
    }
    return true;
}

std::size_t PermHash::operator()(const Perm& p) const {
    std::size_t h = 1469598103934665603ULL;
    for (int v : p) {
        h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL;
        h *= 1099511628211ULL;
    }
    return h;
}

PermGroup::PermGroup(int degree, std::vector<Perm> gens, std::string name,
                     std::size_t cap)
    : degree_(degree), gens_(std::move(gens)), name_(std::move(name)) {
    if (degree < 1) throw std::invalid_argument("group degree must be >= 1");
    for (const auto& g : gens_) {
        if (static_cast<int>(g.size()) != degree || !perm_valid(g))
            throw std::invalid_argument("generator is not a permutation of the stated degree");
    }
    Perm id = perm_identity(degree);
    elements_.push_back(id);
    links_.push_back({-1, -1});
    index_[id] = 0;
    for (std::size_t head = 0; head < elements_.size(); ++head) {
        for (std::size_t gi = 0; gi < gens_.size(); ++gi) {
            Perm next = perm_mul(elements_[head], gens_[gi]);
            if (index_.count(next)) continue;
            if (elements_.size() >= cap)
                throw std::runtime_error("group order exceeds enumeration cap");
            index_[next] = static_cast<int>(elements_.size());
            elements_.push_back(std::move(next));
            links_.push_back({static_cast<int>(head), static_cast<int>(gi)});
        }
    }
}

namespace {

Perm parse_generator(const std::string& line, int degree) {
    std::string s = line;
    if (s.find('[') != std::string::npos) {
        Perm p;
        std::string num;
        for (char ch : s) {
            if (isdigit(static_cast<unsigned char>(ch))) {
                num += ch;
            } else if (!num.empty()) {
                p.push_back(std::stoi(num) - 1);
                num.clear();
            }
        }
        if (!num.empty()) p.push_back(std::stoi(num) - 1);
        if (static_cast<int>(p.size()) != degree)
            throw std::runtime_error("image list length does not match degree");
        if (!perm_valid(p)) throw std::runtime_error("image list is not a permutation");
        return p;
    }
    Perm p = perm_identity(degree);
    std::vector<int> cycle;
    std::string num;
    bool in_cycle = false;
    auto flush_num = [&]() {
        if (num.empty()) return;
        int v = std::stoi(num) - 1;
        num.clear();
        if (v < 0 || v >= degree) throw std::runtime_error("point out of range in cycle");
        cycle.push_back(v);
    };
    auto close_cycle = [&]() {
        flush_num();
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            int from = cycle[i], to = cycle[(i + 1) % cycle.size()];
            if (p[from] != from) throw std::runtime_error("point repeated in cycles");
            p[from] = to;
        }
        // re-validate: fixed points written as 1-cycles are fine
        cycle.clear();
    };
    for (char ch : s) {
        if (ch == '(') {
            if (in_cycle) throw std::runtime_error("nested cycle");
            in_cycle = true;
        } else if (ch == ')') {
            if (!in_cycle) throw std::runtime_error("unbalanced cycle");
            close_cycle();
            in_cycle = false;
        } else if (isdigit(static_cast<unsigned char>(ch))) {
            if (!in_cycle) throw std::runtime_error("digit outside cycle");
            num += ch;
        } else if (ch == ' ' || ch == ',' || ch == '\t') {
            flush_num();
        } else {
            throw std::runtime_error(std::string("unexpected character in generator: ") + ch);
        }
    }
    if (in_cycle) throw std::runtime_error("unterminated cycle");
    if (!perm_valid(p)) throw std::runtime_error("cycles do not define a permutation");
    return p;
}

}  // namespace

PermGroup PermGroup::load(const std::string& text, std::string name,
                          std::size_t cap) {
    std::istringstream in(text);
    std::string line;
    int degree = -1;
    std::vector<Perm> gens;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        std::size_t b = line.find_last_not_of(" \t\r");
        line = line.substr(a, b - a + 1);
        if (degree < 0) {
            std::istringstream ls(line);
            std::string kw;
            ls >> kw >> degree;
            if (kw != "degree" || degree < 1 || ls.fail())
                throw std::runtime_error("group file must start with `degree n`");
            continue;
        }
        gens.push_back(parse_generator(line, degree));
    }
    if (degree < 0) throw std::runtime_error("group file must start with `degree n`");
    return PermGroup(degree, std::move(gens), std::move(name), cap);
}

PermGroup PermGroup::load_file(const std::string& path, std::string name,
                               std::size_t cap) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open group file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    if (name.empty()) name = path;
    return load(ss.str(), std::move(name), cap);
}

int PermGroup::index_of(const Perm& p) const {
    auto it = index_.find(p);
    return it == index_.end() ? -1 : it->second;
}

int PermGroup::mul(int a, int b) const {
    return index_.at(perm_mul(elements_[a], elements_[b]));
}

int PermGroup::inverse(int a) const { return index_.at(perm_inv(elements_[a])); }

int PermGroup::conjugate(int g, int x) const {
    const Perm& xp = elements_[x];
    return index_.at(perm_mul(perm_mul(perm_inv(xp), elements_[g]), xp));
}

void PermGroup::ensure_classes() const {
    if (!classes_.empty()) return;
    int n = static_cast<int>(elements_.size());
    class_of_.assign(n, -1);
    std::vector<std::vector<int>> raw;
    for (int e = 0; e < n; ++e) {
        if (class_of_[e] >= 0) continue;
        int cid = static_cast<int>(raw.size());
        std::vector<int> orbit{e};
        class_of_[e] = cid;
        for (std::size_t h = 0; h < orbit.size(); ++h) {
            for (std::size_t gi = 0; gi < gens_.size(); ++gi) {
                Perm c = perm_mul(perm_mul(perm_inv(gens_[gi]), elements_[orbit[h]]),
                                  gens_[gi]);
                int ci = index_.at(c);
                if (class_of_[ci] < 0) {
                    class_of_[ci] = cid;
                    orbit.push_back(ci);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        raw.push_back(std::move(orbit));
    }
    // deterministic order: element order, class size, least representative
    std::vector<int> perm_order_of(raw.size());
    std::vector<const Perm*> least(raw.size());
    for (std::size_t c = 0; c < raw.size(); ++c) {
        perm_order_of[c] = perm_order(elements_[raw[c][0]]);
        const Perm* m = &elements_[raw[c][0]];
        for (int e : raw[c])
            if (elements_[e] < *m) m = &elements_[e];
        least[c] = m;
    }
    std::vector<int> idx(raw.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (perm_order_of[a] != perm_order_of[b])
            return perm_order_of[a] < perm_order_of[b];
        if (raw[a].size() != raw[b].size()) return raw[a].size() < raw[b].size();
        return *least[a] < *least[b];
    });
    std::vector<int> new_id(raw.size());
    for (std::size_t i = 0; i < idx.size(); ++i) new_id[idx[i]] = static_cast<int>(i);
    for (int e = 0; e < n; ++e) class_of_[e] = new_id[class_of_[e]];
    classes_.resize(raw.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        int c = idx[i];
        ConjClass cc;
        cc.members = raw[c];
        cc.rep = index_.at(*least[c]);
        cc.element_order = perm_order_of[c];
        cc.size = raw[c].size();
        cc.centralizer_order = elements_.size() / cc.size;
        cc.defect = 0;
        for (std::uint64_t z = cc.centralizer_order; z % 2 == 0; z /= 2) ++cc.defect;
        cc.is_2regular = (cc.element_order % 2 == 1);
        classes_[i] = std::move(cc);
    }
    class_inv_.assign(raw.size(), -1);
    for (std::size_t i = 0; i < classes_.size(); ++i)
        class_inv_[i] = class_of_[inverse(classes_[i].rep)];
}

const std::vector<ConjClass>& PermGroup::classes() const {
    ensure_classes();
    return classes_;
}

int PermGroup::class_of(int elem) const {
    ensure_classes();
    return class_of_[elem];
}

int PermGroup::class_inverse(int c) const {
    ensure_classes();
    return class_inv_[c];
}

std::vector<int> PermGroup::regular_classes() const {
    ensure_classes();
    std::vector<int> out;
    for (std::size_t i = 0; i < classes_.size(); ++i)
        if (classes_[i].is_2regular) out.push_back(static_cast<int>(i));
    return out;
}

std::uint64_t PermGroup::exponent() const {
    ensure_classes();
    std::uint64_t e = 1;
    for (const auto& c : classes_) e = std::lcm(e, static_cast<std::uint64_t>(c.element_order));
    return e;
}

bool PermGroup::has_subgroup(const PermGroup& H) const {
    if (H.degree() != degree_) return false;
    for (const auto& g : H.generators())
        if (!contains(g)) return false;
    return true;
}

bool PermGroup::is_normal(const PermGroup& H) const {
    if (!has_subgroup(H)) return false;
    for (const auto& g : gens_) {
        Perm gi = perm_inv(g);
        for (const auto& h : H.generators())
            if (!H.contains(perm_mul(perm_mul(gi, h), g))) return false;
    }
    return true;
}

PermGroup PermGroup::subgroup(std::vector<Perm> gens, std::string name) const {
    PermGroup H(degree_, std::move(gens), std::move(name), elements_.size() + 1);
    if (!has_subgroup(H)) throw std::invalid_argument("generators lie outside the group");
    return H;
}

PermGroup PermGroup::normal_closure(const std::vector<Perm>& seed) const {
    PermGroup H = subgroup(seed);
    return normal_closure_in(*this, H);
}

PermGroup PermGroup::normal_closure_in(const PermGroup& L, const PermGroup& H) {
    std::vector<Perm> gens = H.generators();
    PermGroup K = L.subgroup(gens);
    for (;;) {
        bool grew = false;
        for (const auto& g : L.generators()) {
            Perm gi = perm_inv(g);
            for (std::size_t i = 0; i < gens.size(); ++i) {
                Perm c = perm_mul(perm_mul(gi, gens[i]), g);
                if (!K.contains(c)) {
                    gens.push_back(std::move(c));
                    grew = true;
                }
            }
            if (grew) break;
        }
        if (!grew) return K;
        K = L.subgroup(gens);
    }
}

std::vector<PermGroup> PermGroup::normal_subgroups() const {
    ensure_classes();
    // atoms: normal closures of single classes; then close under joins
    std::set<std::vector<int>> seen;
    std::vector<PermGroup> out;
    auto key_of = [&](const PermGroup& H) {
        std::vector<int> key;
        key.reserve(H.order());
        for (const auto& e : H.elements()) key.push_back(index_.at(e));
        std::sort(key.begin(), key.end());
        return key;
    };
    auto push = [&](PermGroup H) -> bool {
        auto key = key_of(H);
        if (seen.count(key)) return false;
        seen.insert(std::move(key));
        out.push_back(std::move(H));
        return true;
    };
    push(subgroup({}));
    std::vector<PermGroup> atoms;
    for (const auto& c : classes_) {
        if (c.element_order == 1) continue;
        std::vector<Perm> gens;
        for (int e : c.members) gens.push_back(elements_[e]);
        PermGroup N = subgroup(std::move(gens));
        if (push(N)) atoms.push_back(out.back());
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (const auto& a : atoms) {
            if (out[i].order() == order()) continue;
            std::vector<Perm> gens = out[i].generators();
            for (const auto& g : a.generators()) gens.push_back(g);
            push(subgroup(std::move(gens)));
        }
    }
    std::sort(out.begin(), out.end(), [](const PermGroup& x, const PermGroup& y) {
        return x.order() < y.order();
    });
    return out;
}

std::vector<Perm> PermGroup::coset_transversal(const PermGroup& T) const {
    if (!has_subgroup(T)) throw std::invalid_argument("transversal: not a subgroup");
    std::vector<char> seen(elements_.size(), 0);
    std::vector<Perm> reps;
    for (std::size_t e = 0; e < elements_.size(); ++e) {
        if (seen[e]) continue;
        reps.push_back(elements_[e]);
        for (const auto& t : T.elements()) seen[index_.at(perm_mul(elements_[e], t))] = 1;
    }
    return reps;
}

std::uint64_t PermGroup::structure_hash() const {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::uint64_t v) {
        h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h *= 1099511628211ULL;
    };
    mix(degree_);
    for (const auto& g : gens_)
        for (int v : g) mix(static_cast<std::uint64_t>(v));
    return h;
}

Perm QuotientMap::image(const PermGroup& G, const Perm& g) const {
    Perm q(coset_reps.size());
    for (std::size_t p = 0; p < coset_reps.size(); ++p)
        q[p] = point_of[G.index_of(perm_mul(coset_reps[p], g))];
    return q;
}

QuotientMap make_quotient(const PermGroup& G, const PermGroup& N) {
    if (!G.is_normal(N)) throw std::invalid_argument("quotient: subgroup is not normal");
    QuotientMap qm;
    qm.coset_reps = G.coset_transversal(N);
    qm.point_of.assign(G.order(), -1);
    for (std::size_t p = 0; p < qm.coset_reps.size(); ++p)
        for (const auto& t : N.elements())
            qm.point_of[G.index_of(perm_mul(qm.coset_reps[p], t))] = static_cast<int>(p);
    std::vector<Perm> qgens;
    for (const auto& g : G.generators()) qgens.push_back(qm.image(G, g));
    qm.group = PermGroup(static_cast<int>(qm.coset_reps.size()), std::move(qgens),
                         G.name().empty() ? "" : G.name() + "/" + N.name());
    return qm;
}

std::vector<PermGroup> subnormal_chain(const PermGroup& G, const PermGroup& H) {
    if (!G.has_subgroup(H)) throw std::invalid_argument("subnormal_chain: not a subgroup");
    if (H.order() == G.order()) return {};
    std::vector<PermGroup> desc{G};
    for (;;) {
        PermGroup M = PermGroup::normal_closure_in(desc.back(), H);
        if (M.order() == desc.back().order())
            throw std::runtime_error("subgroup is not subnormal");
        if (M.order() == H.order()) break;
        desc.push_back(std::move(M));
    }
    std::reverse(desc.begin(), desc.end());
    return desc;
}

std::vector<int> real_2regular_classes_in(const PermGroup& G, const PermGroup& N) {
    if (!G.is_normal(N)) throw std::invalid_argument("subgroup is not normal");
    std::vector<int> out;
    const auto& cls = G.classes();
    for (std::size_t c = 0; c < cls.size(); ++c) {
        if (!cls[c].is_2regular) continue;
        if (!N.contains(G.element(cls[c].rep))) continue;
        if (!G.class_is_real(static_cast<int>(c))) continue;
        out.push_back(static_cast<int>(c));
    }
    return out;
}

std::vector<ClassOrbit> g_orbits_on_subgroup_classes(const PermGroup& G,
                                                     const PermGroup& N) {
    if (!G.is_normal(N)) throw std::invalid_argument("subgroup is not normal");
    const auto& ncls = N.classes();
    std::vector<int> orbit_of(ncls.size(), -1);
    std::vector<ClassOrbit> orbits;
    for (std::size_t c = 0; c < ncls.size(); ++c) {
        if (orbit_of[c] >= 0) continue;
        int oid = static_cast<int>(orbits.size());
        std::vector<int> members{static_cast<int>(c)};
        orbit_of[c] = oid;
        for (std::size_t h = 0; h < members.size(); ++h) {
            const Perm& rep = N.element(ncls[members[h]].rep);
            for (const auto& g : G.generators()) {
                Perm cj = perm_mul(perm_mul(perm_inv(g), rep), g);
                int nc = N.class_of(N.index_of(cj));
                if (orbit_of[nc] < 0) {
                    orbit_of[nc] = oid;
                    members.push_back(nc);
                }
            }
        }
        std::sort(members.begin(), members.end());
        ClassOrbit o;
        o.members = std::move(members);
        int gc = G.class_of(G.index_of(N.element(ncls[c].rep)));
        o.real = G.class_is_real(gc);
        orbits.push_back(std::move(o));
    }
    return orbits;
}

}  // namespace char2
