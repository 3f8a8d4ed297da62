#include "nullcert/system_stats.hpp"

#include <algorithm>
#include <set>

namespace nullcert {

SystemStats system_stats(const PolySystem& sys) {
  SystemStats st;
  st.n = sys.n;
  st.k = sys.k();
  st.d.assign(static_cast<std::size_t>(sys.n), 0);

  for (const Polynomial& f : sys.polys) {
    st.m_i.push_back(static_cast<std::int64_t>(f.terms().size()));
    st.m_sigma += static_cast<std::int64_t>(f.terms().size());
    for (const Term& t : f.terms()) {
      for (int j = 0; j < sys.n; ++j)
        st.d[static_cast<std::size_t>(j)] =
            std::max(st.d[static_cast<std::size_t>(j)],
                     t.mono.exps[static_cast<std::size_t>(j)]);
    }
  }

  for (int l = 1; l <= sys.n - 1; ++l) {
    std::int64_t pairs = 0;
    Int max_rank = 1;  // the constant monomial's rank
    for (const Polynomial& f : sys.polys) {
      std::set<std::pair<std::vector<int>, int>> seen;
      for (const Term& t : f.terms()) {
        Monomial pre = t.mono.prefix(l);
        seen.insert({pre.exps, t.mono.exps[static_cast<std::size_t>(l)]});
        max_rank = std::max(max_rank, mono_rank(pre));
      }
      pairs += static_cast<std::int64_t>(seen.size());
    }
    st.m_sigma_level.push_back(pairs);
    st.N_level.push_back(max_rank);
  }

  return st;
}

}  // namespace nullcert
