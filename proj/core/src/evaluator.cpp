#include "henkin/evaluator.hpp"
#include "internal.hpp"

#include <algorithm>
#include <bit>
#include <memory>
#include <numeric>

namespace henkin::eval {

  DomainSize::DomainSize(std::uint32_t m) : m_(m) {
    if (m == 0) {
      throw std::invalid_argument("domain size must be at least 1");
    }
  }

  Element SkolemTable::operator()(std::span<Element const> args,
                                  std::uint32_t            m) const {
    std::size_t idx = 0;
    for (auto a : args) {
      idx = idx * m + a;
    }
    return entries.at(idx);
  }

  std::string format_witness(std::span<SkolemTable const> tables,
                             std::uint32_t                m) {
    std::string out;
    for (auto const& t : tables) {
      out += t.owner.name();
      out += ':';
      std::vector<Element> tuple(t.arity, 0);
      for (std::size_t idx = 0; idx < t.entries.size(); ++idx) {
        std::size_t rest = idx;
        for (std::size_t k = t.arity; k-- > 0;) {
          tuple[k] = static_cast<Element>(rest % m);
          rest /= m;
        }
        out += " (";
        for (std::size_t k = 0; k < t.arity; ++k) {
          if (k != 0) {
            out += ',';
          }
          out += std::to_string(tuple[k]);
        }
        out += ")->";
        out += std::to_string(t.entries[idx]);
      }
      out += '\n';
    }
    return out;
  }

  namespace {

    ////////////////////////////////////////////////////////////////////////
    // Slot-indexed program
    ////////////////////////////////////////////////////////////////////////

    enum class Op : std::uint8_t {
      eq,
      top,
      bottom,
      neg,
      conj,
      disj,
      imp,
      iff,
      forall,
      exists,
      branch
    };

    using Slot = std::uint32_t;

    struct Node {
      explicit Node(Op o) : op(o) {}

      Op                op;
      Slot              a = 0, b = 0;
      std::uint32_t     first = 0, count = 0;
      std::uint32_t     aux   = 0;
      std::vector<Slot> free;  // sorted
    };

    struct Conjunct {
      std::uint32_t              node;
      std::vector<std::uint32_t> support;  // universal indices, ascending
      std::vector<std::uint32_t> exist;    // existential indices, ascending
    };

    struct BranchInfo {
      std::vector<Slot>                       uslots, eslots;
      std::vector<std::vector<std::uint32_t>> deps;  // universal indices
      std::vector<Variable>                   names;
      std::vector<Conjunct>                   conjuncts;
    };

    struct Program {
      std::vector<Node>              nodes;
      std::vector<std::uint32_t>     kids;
      std::vector<std::vector<Slot>> binders;
      std::vector<BranchInfo>        branches;
      std::map<Variable, Slot>       free_slots;
      Slot                           slot_count = 0;
      std::uint32_t                  root       = 0;
    };

    bool contains(std::vector<Slot> const& sorted, Slot s) {
      return std::binary_search(sorted.begin(), sorted.end(), s);
    }

    class Compiler {
     public:
      Program run(Formula const& f) {
        prog_.root = compile(f);
        return std::move(prog_);
      }

     private:
      Slot lookup(Variable const& v) {
        auto it = scope_.find(v);
        if (it != scope_.end() && !it->second.empty()) {
          return it->second.back();
        }
        auto [jt, fresh] = prog_.free_slots.try_emplace(v, prog_.slot_count);
        if (fresh) {
          ++prog_.slot_count;
        }
        return jt->second;
      }

      Slot bind(Variable const& v) {
        Slot s = prog_.slot_count++;
        scope_[v].push_back(s);
        return s;
      }

      void unbind(Variable const& v) {
        scope_[v].pop_back();
      }

      std::uint32_t push(Node n, std::vector<std::uint32_t> const& children) {
        n.first = static_cast<std::uint32_t>(prog_.kids.size());
        n.count = static_cast<std::uint32_t>(children.size());
        prog_.kids.insert(prog_.kids.end(), children.begin(), children.end());
        prog_.nodes.push_back(std::move(n));
        return static_cast<std::uint32_t>(prog_.nodes.size() - 1);
      }

      std::vector<Slot> union_free(std::vector<std::uint32_t> const& children,
                                   std::vector<Slot> const& minus = {}) {
        std::vector<Slot> out;
        for (auto c : children) {
          auto const& fr = prog_.nodes[c].free;
          out.insert(out.end(), fr.begin(), fr.end());
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        std::erase_if(out, [&](Slot s) {
          return std::find(minus.begin(), minus.end(), s) != minus.end();
        });
        return out;
      }

      void flatten(std::uint32_t n, std::vector<std::uint32_t>& out) const {
        auto const& node = prog_.nodes[n];
        if (node.op == Op::conj) {
          for (std::uint32_t i = 0; i < node.count; ++i) {
            flatten(prog_.kids[node.first + i], out);
          }
        } else {
          out.push_back(n);
        }
      }

      std::uint32_t compile(Formula const& f) {
        using K = Formula::Kind;
        switch (f.kind()) {
          case K::equal: {
            Node n{Op::eq};
            n.a    = lookup(f.lhs_var());
            n.b    = lookup(f.rhs_var());
            n.free = {std::min(n.a, n.b), std::max(n.a, n.b)};
            n.free.erase(std::unique(n.free.begin(), n.free.end()),
                         n.free.end());
            return push(std::move(n), {});
          }
          case K::truth: return push(Node{Op::top}, {});
          case K::falsity: return push(Node{Op::bottom}, {});
          case K::negation:
          case K::conjunction:
          case K::disjunction:
          case K::implication:
          case K::equivalence: {
            std::vector<std::uint32_t> cs;
            for (auto const& g : f.operands()) {
              cs.push_back(compile(g));
            }
            Op op = f.kind() == K::negation      ? Op::neg
                    : f.kind() == K::conjunction ? Op::conj
                    : f.kind() == K::disjunction ? Op::disj
                    : f.kind() == K::implication ? Op::imp
                                                 : Op::iff;
            Node n{op};
            n.free = union_free(cs);
            return push(std::move(n), cs);
          }
          case K::forall:
          case K::exists: {
            std::vector<Slot> slots;
            for (auto const& v : f.bound()) {
              slots.push_back(bind(v));
            }
            auto body = compile(f.body());
            for (auto const& v : f.bound()) {
              unbind(v);
            }
            Node n{f.kind() == K::forall ? Op::forall : Op::exists};
            n.aux  = static_cast<std::uint32_t>(prog_.binders.size());
            n.free = union_free({body}, slots);
            prog_.binders.push_back(std::move(slots));
            return push(std::move(n), {body});
          }
          case K::branch: return compile_branch(f);
        }
        throw std::logic_error("unknown formula kind");
      }

      std::uint32_t compile_branch(Formula const& f) {
        auto const& pre = f.prefix();
        BranchInfo  info;
        std::map<Variable, std::uint32_t> uindex;
        for (auto const& u : pre.universals()) {
          uindex.emplace(u, static_cast<std::uint32_t>(info.uslots.size()));
          info.uslots.push_back(bind(u));
        }
        for (auto const& e : pre.existentials()) {
          info.eslots.push_back(bind(e.var));
          info.names.push_back(e.var);
          std::vector<std::uint32_t> ds;
          for (auto const& d : e.deps) {
            ds.push_back(uindex.at(d));
          }
          info.deps.push_back(std::move(ds));
        }
        auto body = compile(f.body());
        for (auto const& u : pre.universals()) {
          unbind(u);
        }
        for (auto const& e : pre.existentials()) {
          unbind(e.var);
        }

        std::vector<std::uint32_t> parts;
        flatten(body, parts);
        for (auto part : parts) {
          auto const&                free = prog_.nodes[part].free;
          std::vector<std::uint32_t> support, exist;
          for (std::uint32_t i = 0; i < info.uslots.size(); ++i) {
            if (contains(free, info.uslots[i])) {
              support.push_back(i);
            }
          }
          for (std::uint32_t j = 0; j < info.eslots.size(); ++j) {
            if (contains(free, info.eslots[j])) {
              exist.push_back(j);
              support.insert(support.end(), info.deps[j].begin(),
                             info.deps[j].end());
            }
          }
          std::sort(support.begin(), support.end());
          support.erase(std::unique(support.begin(), support.end()),
                        support.end());
          info.conjuncts.push_back({part, std::move(support), std::move(exist)});
        }

        std::vector<Slot> bound = info.uslots;
        bound.insert(bound.end(), info.eslots.begin(), info.eslots.end());
        Node n{Op::branch};
        n.aux  = static_cast<std::uint32_t>(prog_.branches.size());
        n.free = union_free({body}, bound);
        prog_.branches.push_back(std::move(info));
        return push(std::move(n), {body});
      }

      Program                                   prog_;
      std::map<Variable, std::vector<Slot>>     scope_;
    };

    ////////////////////////////////////////////////////////////////////////
    // Constraint skeleton of one Henkin node at one domain size
    ////////////////////////////////////////////////////////////////////////

    // Table entry e of existential j covers dependency tuple
    // e - base[j] (base-m numeral, first dependency most significant).
    // An instance is one conjunct at one assignment of its support; its
    // scope lists the entries it reads, in the conjunct's `exist` order.
    struct Skeleton {
      std::vector<std::uint32_t> base;
      std::vector<std::uint32_t> owner;
      std::uint32_t              entry_count = 0;

      std::vector<std::uint32_t> inst_conj;
      std::vector<std::uint32_t> support_off;
      std::vector<Element>       support_vals;
      std::vector<std::uint32_t> scope_off;  // size instances + 1
      std::vector<std::uint32_t> scope;

      std::vector<std::uint32_t> adj_off;  // size entry_count + 1
      std::vector<std::uint32_t> adj;

      std::vector<std::uint32_t>              rank;
      std::vector<std::vector<std::uint32_t>> components;  // by rank

      std::size_t instances() const { return inst_conj.size(); }
    };

    constexpr std::uint64_t max_table_entries = std::uint64_t{1} << 24;

    std::uint64_t checked_power(std::uint64_t m, std::size_t k,
                                std::uint64_t limit) {
      std::uint64_t r = 1;
      for (std::size_t i = 0; i < k; ++i) {
        if (r > limit / m) {
          return limit + 1;
        }
        r *= m;
      }
      return r;
    }

    struct UnionFind {
      std::vector<std::uint32_t> parent;
      explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0u);
      }
      std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) {
          parent[x] = parent[parent[x]];
          x         = parent[x];
        }
        return x;
      }
      void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a != b) {
          parent[std::max(a, b)] = std::min(a, b);
        }
      }
    };

    ////////////////////////////////////////////////////////////////////////
    // Engine
    ////////////////////////////////////////////////////////////////////////

    class Engine {
     public:
      Engine(Program const& prog, std::uint32_t m, std::uint64_t budget)
          : prog_(prog),
            m_(m),
            budget_(budget),
            env_(prog.slot_count, 0),
            skeletons_(prog.branches.size()) {}

      std::vector<Element>& env() { return env_; }

      bool run() { return eval(prog_.root); }

      std::uint64_t             nodes() const { return nodes_; }
      std::vector<SkolemTable>& witness() { return witness_; }

     private:
      void tick() {
        if (++nodes_ > budget_) {
          throw ResourceLimitExceeded(
              "node budget of " + std::to_string(budget_) + " exhausted",
              nodes_, m_);
        }
      }

      std::uint32_t kid(Node const& n, std::uint32_t i) const {
        return prog_.kids[n.first + i];
      }

      bool eval(std::uint32_t idx) {
        auto const& n = prog_.nodes[idx];
        switch (n.op) {
          case Op::eq: return env_[n.a] == env_[n.b];
          case Op::top: return true;
          case Op::bottom: return false;
          case Op::neg: {
            ++suppress_;
            bool r = !eval(kid(n, 0));
            --suppress_;
            return r;
          }
          case Op::conj:
            for (std::uint32_t i = 0; i < n.count; ++i) {
              if (!eval(kid(n, i))) {
                return false;
              }
            }
            return true;
          case Op::disj:
            for (std::uint32_t i = 0; i < n.count; ++i) {
              if (eval(kid(n, i))) {
                return true;
              }
            }
            return false;
          case Op::imp: {
            ++suppress_;
            bool lhs = eval(kid(n, 0));
            --suppress_;
            return !lhs || eval(kid(n, 1));
          }
          case Op::iff: {
            ++suppress_;
            bool r = eval(kid(n, 0)) == eval(kid(n, 1));
            --suppress_;
            return r;
          }
          case Op::forall:
          case Op::exists: return eval_quantifier(n, 0);
          case Op::branch: return eval_branch(n);
        }
        return false;
      }

      // Elements not named by the free variables (nor by the variables
      // bound so far) are interchangeable under automorphisms of a pure
      // equality structure, so one representative of them suffices.
      bool eval_quantifier(Node const& n, std::size_t k) {
        auto const& slots = prog_.binders[n.aux];
        if (k == slots.size()) {
          return eval(kid(n, 0));
        }
        std::vector<Element> named;
        named.reserve(n.free.size() + k);
        for (auto s : n.free) {
          named.push_back(env_[s]);
        }
        for (std::size_t i = 0; i < k; ++i) {
          named.push_back(env_[slots[i]]);
        }
        std::sort(named.begin(), named.end());
        named.erase(std::unique(named.begin(), named.end()), named.end());
        Element fresh = 0;
        for (auto v : named) {
          if (v == fresh) {
            ++fresh;
          }
        }
        if (fresh < m_) {
          named.insert(std::lower_bound(named.begin(), named.end(), fresh),
                       fresh);
        }
        bool const is_exists = n.op == Op::exists;
        for (auto v : named) {
          tick();
          env_[slots[k]] = v;
          bool r         = eval_quantifier(n, k + 1);
          if (r == is_exists) {
            return r;
          }
        }
        return !is_exists;
      }

      Skeleton const& skeleton(std::uint32_t b) {
        if (!skeletons_[b]) {
          skeletons_[b] = build(prog_.branches[b]);
        }
        return *skeletons_[b];
      }

      std::unique_ptr<Skeleton> build(BranchInfo const& info) {
        if (m_ > 64) {
          throw ResourceLimitExceeded(
              "Henkin search supports domains of at most 64 elements", nodes_,
              m_);
        }
        auto  sk = std::make_unique<Skeleton>();
        auto& s  = *sk;

        std::uint64_t total = 0;
        for (std::size_t j = 0; j < info.deps.size(); ++j) {
          auto size = checked_power(m_, info.deps[j].size(), max_table_entries);
          total += size;
          if (total > max_table_entries) {
            throw ResourceLimitExceeded("Skolem tables too large", nodes_, m_);
          }
          s.base.push_back(static_cast<std::uint32_t>(total - size));
          s.owner.insert(s.owner.end(), size, static_cast<std::uint32_t>(j));
        }
        s.entry_count = static_cast<std::uint32_t>(total);

        s.scope_off.push_back(0);
        for (std::uint32_t c = 0; c < info.conjuncts.size(); ++c) {
          auto const& con = info.conjuncts[c];
          auto const  k   = con.support.size();
          std::vector<std::uint32_t> pos(info.uslots.size(), 0);
          for (std::uint32_t p = 0; p < k; ++p) {
            pos[con.support[p]] = p;
          }
          std::vector<Element> vals(k, 0);
          while (true) {
            tick();
            s.inst_conj.push_back(c);
            s.support_off.push_back(
                static_cast<std::uint32_t>(s.support_vals.size()));
            s.support_vals.insert(s.support_vals.end(), vals.begin(),
                                  vals.end());
            for (auto j : con.exist) {
              std::uint32_t idx = 0;
              for (auto d : info.deps[j]) {
                idx = idx * m_ + vals[pos[d]];
              }
              s.scope.push_back(s.base[j] + idx);
            }
            s.scope_off.push_back(static_cast<std::uint32_t>(s.scope.size()));
            std::size_t p = k;
            while (p > 0 && ++vals[p - 1] == m_) {
              vals[--p] = 0;
            }
            if (p == 0) {
              break;
            }
          }
        }

        std::vector<std::uint32_t> degree(s.entry_count + 1, 0);
        for (auto e : s.scope) {
          ++degree[e + 1];
        }
        s.adj_off.assign(s.entry_count + 1, 0);
        std::partial_sum(degree.begin(), degree.end(), s.adj_off.begin());
        s.adj.resize(s.scope.size());
        std::vector<std::uint32_t> fill(s.adj_off.begin(), s.adj_off.end() - 1);
        for (std::uint32_t i = 0; i < s.instances(); ++i) {
          for (auto o = s.scope_off[i]; o < s.scope_off[i + 1]; ++o) {
            s.adj[fill[s.scope[o]]++] = i;
          }
        }

        // First demand of an entry: the lexicographically least universal
        // tuple whose projection onto the owner's dependencies is the
        // entry's tuple, i.e. that tuple padded with zeros.
        auto const u = info.uslots.size();
        std::vector<Element> keys(static_cast<std::size_t>(s.entry_count) * u, 0);
        for (std::uint32_t e = 0; e < s.entry_count; ++e) {
          auto const& ds   = info.deps[s.owner[e]];
          std::uint32_t rest = e - s.base[s.owner[e]];
          for (std::size_t k = ds.size(); k-- > 0;) {
            keys[e * u + ds[k]] = rest % m_;
            rest /= m_;
          }
        }
        std::vector<std::uint32_t> order(s.entry_count);
        std::iota(order.begin(), order.end(), 0u);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::uint32_t a, std::uint32_t b) {
                           return std::lexicographical_compare(
                               keys.begin() + a * u, keys.begin() + (a + 1) * u,
                               keys.begin() + b * u, keys.begin() + (b + 1) * u);
                         });
        s.rank.resize(s.entry_count);
        for (std::uint32_t r = 0; r < s.entry_count; ++r) {
          s.rank[order[r]] = r;
        }

        UnionFind uf(s.entry_count);
        for (std::uint32_t i = 0; i < s.instances(); ++i) {
          for (auto o = s.scope_off[i] + 1; o < s.scope_off[i + 1]; ++o) {
            uf.unite(s.scope[s.scope_off[i]], s.scope[o]);
          }
        }
        std::map<std::uint32_t, std::size_t> comp_of_root;
        for (auto e : order) {
          if (s.adj_off[e] == s.adj_off[e + 1]) {
            continue;
          }
          auto [it, fresh] = comp_of_root.try_emplace(uf.find(e),
                                                      s.components.size());
          if (fresh) {
            s.components.emplace_back();
          }
          s.components[it->second].push_back(e);
        }
        return sk;
      }

      struct SearchState {
        Skeleton const&            sk;
        BranchInfo const&          info;
        std::vector<std::uint64_t> mask;
        std::vector<Element>       value;
        std::vector<char>          assigned;
        std::vector<std::uint32_t> open;  // unassigned entries per instance
        std::vector<std::pair<std::uint32_t, std::uint64_t>> trail;
      };

      bool eval_instance(SearchState& st, std::uint32_t i) {
        auto const& sk  = st.sk;
        auto const& con = st.info.conjuncts[sk.inst_conj[i]];
        auto const* vals = sk.support_vals.data() + sk.support_off[i];
        for (std::size_t p = 0; p < con.support.size(); ++p) {
          env_[st.info.uslots[con.support[p]]] = vals[p];
        }
        auto o = sk.scope_off[i];
        for (auto j : con.exist) {
          env_[st.info.eslots[j]] = st.value[sk.scope[o++]];
        }
        ++suppress_;
        bool r = eval(con.node);
        --suppress_;
        return r;
      }

      // Removes from the one open entry of instance i every value that
      // falsifies it. False on a wipeout.
      bool narrow(SearchState& st, std::uint32_t i) {
        auto const& sk   = st.sk;
        std::uint32_t open = sk.entry_count;
        for (auto o = sk.scope_off[i]; o < sk.scope_off[i + 1]; ++o) {
          if (!st.assigned[sk.scope[o]]) {
            open = sk.scope[o];
            break;
          }
        }
        std::uint64_t keep = 0;
        for (std::uint64_t rest = st.mask[open]; rest != 0; rest &= rest - 1) {
          auto v        = static_cast<Element>(std::countr_zero(rest));
          st.value[open] = v;
          if (eval_instance(st, i)) {
            keep |= std::uint64_t{1} << v;
          }
        }
        if (keep != st.mask[open]) {
          st.trail.emplace_back(open, st.mask[open]);
          st.mask[open] = keep;
        }
        return keep != 0;
      }

      bool assign(SearchState& st, std::uint32_t e, Element v) {
        auto const& sk = st.sk;
        st.value[e]    = v;
        st.assigned[e] = 1;
        for (auto o = sk.adj_off[e]; o < sk.adj_off[e + 1]; ++o) {
          --st.open[sk.adj[o]];
        }
        for (auto o = sk.adj_off[e]; o < sk.adj_off[e + 1]; ++o) {
          if (st.open[sk.adj[o]] == 1 && !narrow(st, sk.adj[o])) {
            return false;
          }
        }
        return true;
      }

      void unassign(SearchState& st, std::uint32_t e, std::size_t mark) {
        auto const& sk = st.sk;
        for (auto o = sk.adj_off[e]; o < sk.adj_off[e + 1]; ++o) {
          ++st.open[sk.adj[o]];
        }
        st.assigned[e] = 0;
        while (st.trail.size() > mark) {
          st.mask[st.trail.back().first] = st.trail.back().second;
          st.trail.pop_back();
        }
      }

      // Fewest remaining values first, ties broken by first demand.
      bool search(SearchState& st, std::vector<std::uint32_t> const& entries) {
        std::uint32_t pick = st.sk.entry_count;
        int           best = 65;
        for (auto e : entries) {
          if (!st.assigned[e]) {
            int c = std::popcount(st.mask[e]);
            if (c < best) {
              best = c;
              pick = e;
            }
          }
        }
        if (pick == st.sk.entry_count) {
          return true;
        }
        for (std::uint64_t rest = st.mask[pick]; rest != 0; rest &= rest - 1) {
          tick();
          auto        v    = static_cast<Element>(std::countr_zero(rest));
          std::size_t mark = st.trail.size();
          if (assign(st, pick, v) && search(st, entries)) {
            return true;
          }
          unassign(st, pick, mark);
        }
        return false;
      }

      bool eval_branch(Node const& n) {
        auto const& info = prog_.branches[n.aux];
        auto const& sk   = skeleton(n.aux);
        std::uint64_t const full
            = m_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m_) - 1;
        SearchState st{sk,
                       info,
                       std::vector<std::uint64_t>(sk.entry_count, full),
                       std::vector<Element>(sk.entry_count, 0),
                       std::vector<char>(sk.entry_count, 0),
                       std::vector<std::uint32_t>(sk.instances(), 0),
                       {}};
        for (std::uint32_t i = 0; i < sk.instances(); ++i) {
          st.open[i] = sk.scope_off[i + 1] - sk.scope_off[i];
          if (st.open[i] == 0 && !eval_instance(st, i)) {
            return false;
          }
        }
        for (std::uint32_t i = 0; i < sk.instances(); ++i) {
          if (st.open[i] == 1 && !narrow(st, i)) {
            return false;
          }
        }
        for (auto const& comp : sk.components) {
          if (!search(st, comp)) {
            return false;
          }
        }
        if (suppress_ == 0) {
          witness_.clear();
          for (std::size_t j = 0; j < info.names.size(); ++j) {
            auto end = j + 1 < sk.base.size() ? sk.base[j + 1] : sk.entry_count;
            witness_.push_back({info.names[j], info.deps[j].size(),
                                {st.value.begin() + sk.base[j],
                                 st.value.begin() + end}});
          }
        }
        return true;
      }

      Program const&                         prog_;
      std::uint32_t                          m_;
      std::uint64_t                          budget_;
      std::uint64_t                          nodes_    = 0;
      int                                    suppress_ = 0;
      std::vector<Element>                   env_;
      std::vector<std::unique_ptr<Skeleton>> skeletons_;
      std::vector<SkolemTable>               witness_;
    };

  }  // namespace

  namespace detail {
    void check_preconditions(Formula const&   f,
                             DomainSize       size,
                             Valuation const& env) {
      auto diags = validate(f);
      for (auto const& d : diags) {
        if (d.severity == Severity::error) {
          throw std::invalid_argument("invalid formula: " + d.message);
        }
      }
      for (auto const& v : free_variables(f)) {
        auto it = env.find(v);
        if (it == env.end()) {
          throw std::invalid_argument("free variable '" + v.name()
                                      + "' has no value");
        }
      }
      for (auto const& [v, x] : env) {
        if (x >= size.value()) {
          throw std::invalid_argument("value of '" + v.name()
                                      + "' is outside the domain");
        }
      }
    }
  }  // namespace detail

  Evaluation evaluate(Formula const&   f,
                      DomainSize       size,
                      Valuation const& env,
                      Options const&   opts) {
    detail::check_preconditions(f, size, env);
    auto   prog = Compiler().run(f);
    Engine engine(prog, size.value(), opts.budget);
    for (auto const& [v, s] : prog.free_slots) {
      engine.env()[s] = env.at(v);
    }
    Evaluation out;
    out.value   = engine.run();
    out.nodes   = engine.nodes();
    out.witness = out.value ? std::move(engine.witness())
                            : std::vector<SkolemTable>{};
    return out;
  }

  std::optional<DomainSize> find_min_model(Formula const& f,
                                           std::uint32_t  max_size,
                                           Options const& opts) {
    if (!is_sentence(f)) {
      throw std::invalid_argument("find_min_model expects a sentence");
    }
    for (std::uint32_t m = 1; m <= max_size; ++m) {
      try {
        if (evaluate(f, DomainSize(m), {}, opts).value) {
          return DomainSize(m);
        }
      } catch (ResourceLimitExceeded const& e) {
        throw ResourceLimitExceeded(e.what(), e.nodes(), m);
      }
    }
    return std::nullopt;
  }

}  // namespace henkin::eval
