#include "serialize.hpp"

#include <sstream>

#include "json.hpp"

#include "counting.hpp"

namespace homometry::serialize {

using json = nlohmann::ordered_json;

namespace {

json bracelet_json(const bracelets::BinaryBracelet& b) {
  json arr = json::array();
  for (auto bead : b.beads) arr.push_back(bead);
  return arr;
}

json members_json(const std::vector<bracelets::BinaryBracelet>& members) {
  json arr = json::array();
  for (const auto& m : members) arr.push_back(bracelet_json(m));
  return arr;
}

json qvec_json(const exactmath::QVec4& v) {
  json arr = json::array();
  for (int i = 0; i < 4; ++i) arr.push_back(v[i].str());
  return arr;
}

json affine_map_json(const exactmath::AffineMap4& m) {
  json rows = json::array();
  for (const auto& r : m.rows) rows.push_back(qvec_json(r));
  return json{{"rows", rows}, {"offset", qvec_json(m.offset)}};
}

json cells_json(const exactmath::CellUnion& u) {
  json arr = json::array();
  for (const auto& cell : u.cells) {
    json rows = json::array();
    for (const auto& c : cell.constraints()) rows.push_back(exactmath::constraint_to_text(c));
    arr.push_back(rows);
  }
  return arr;
}

json parametrization_json(const exactmath::Parametrization& par) {
  json dirs = json::array();
  for (const auto& d : par.directions) dirs.push_back(qvec_json(d));
  json bounds = json::array();
  for (const auto& b : par.bounds) {
    json jb;
    jb["lo"] = b.lo ? json(b.lo->str()) : json(nullptr);
    jb["lo_strict"] = b.lo_strict;
    jb["hi"] = b.hi ? json(b.hi->str()) : json(nullptr);
    jb["hi_strict"] = b.hi_strict;
    bounds.push_back(jb);
  }
  json cons = json::array();
  for (const auto& c : par.param_constraints) cons.push_back(exactmath::constraint_to_text(c));
  return json{{"base", qvec_json(par.base)},
              {"directions", dirs},
              {"bounds", bounds},
              {"constraints", cons}};
}

json table_json(const difftables::DifferenceTable& t) {
  json entries;
  for (int pos = 0; pos < difftables::kSymbolCount; ++pos) {
    const auto& e = t.entries[static_cast<size_t>(pos)];
    entries[difftables::symbol_name(pos)] =
        json{{"symbol", difftables::symbol_name(static_cast<int>(e.symbol))},
             {"barred", e.barred}};
  }
  return entries;
}

}  // namespace

std::string classify_lines(const std::vector<classification::HomometryClass>& classes) {
  std::ostringstream os;
  for (const auto& c : classes) {
    json line{{"n", c.n},
              {"type", std::string(1, classification::type_letter(c.type))},
              {"m", c.m},
              {"i", c.params.i}};
    if (c.params.j) line["j"] = *c.params.j;
    line["members"] = members_json(c.members);
    os << line.dump() << '\n';
  }
  return os.str();
}

std::string oracle_lines(std::uint64_t n, const std::vector<bracelets::HomometrySet>& sets) {
  std::ostringstream os;
  for (const auto& s : sets) {
    json dist = json::array();
    for (auto d : s.distances) dist.push_back(d);
    json line{{"n", n}, {"distances", dist}, {"members", members_json(s.members)}};
    os << line.dump() << '\n';
  }
  return os.str();
}

std::string count_csv(std::uint64_t n_lo, std::uint64_t n_hi, bool refined, bool by_type) {
  std::ostringstream os;
  os << "n,h_n";
  if (refined) os << ",pairs,triples";
  if (by_type)
    for (auto t : classification::kAllTypes) os << ',' << classification::type_letter(t);
  os << '\n';
  for (std::uint64_t n = n_lo; n <= n_hi; ++n) {
    os << n << ',' << counting::h_coefficient(n).get_str();
    if (refined) {
      auto [p, t] = counting::refined_counts(n);
      os << ',' << p.get_str() << ',' << t.get_str();
    }
    if (by_type)
      for (auto t : classification::kAllTypes) {
        int scale = classification::scale_factor(t);
        exactmath::BigInt c = n % static_cast<std::uint64_t>(scale) == 0
                                  ? counting::index_set_count(t, n / static_cast<std::uint64_t>(scale))
                                  : exactmath::BigInt(0);
        os << ',' << c.get_str();
      }
    os << '\n';
  }
  return os.str();
}

std::string minimal_tables_json(const difftables::MinimalTablesResult& res, bool dump_cells) {
  json doc{{"p", res.p},
           {"q", res.q},
           {"processed", res.processed},
           {"complete", res.complete},
           {"antichain_size", res.antichain.size()}};
  json chain = json::array();
  for (const auto& ss : res.antichain) {
    json perm = json::array();
    for (int pos = 0; pos < difftables::kSymbolCount; ++pos)
      perm.push_back(difftables::symbol_name(ss.table.perm[static_cast<size_t>(pos)]));
    json item{{"rank", difftables::perm_rank(ss.table.perm)},
              {"perm", perm},
              {"table", table_json(ss.table)},
              {"y", affine_map_json(ss.y)}};
    if (dump_cells) {
      item["cells"] = cells_json(ss.x_cells);
      json pars = json::array();
      for (const auto& cell : ss.x_cells.cells) pars.push_back(parametrization_json(exactmath::parametrize(cell)));
      item["parametrizations"] = pars;
    }
    chain.push_back(item);
  }
  doc["antichain"] = chain;
  return doc.dump(2) + "\n";
}

std::string intersections_json(const difftables::IntersectionReport& rep) {
  json doc{{"pairs_checked", rep.pairs_checked},
           {"triples_checked", rep.triples_checked},
           {"nonempty_triples", rep.nonempty_triples}};
  json list = json::array();
  for (const auto& pi : rep.nonempty) {
    list.push_back(json{{"a", pi.label_a},
                        {"b", pi.label_b},
                        {"p", pi.p},
                        {"q_a", pi.qa},
                        {"q_b", pi.qb},
                        {"cells", cells_json(pi.x_cells)},
                        {"y_a", affine_map_json(pi.ya)},
                        {"y_b", affine_map_json(pi.yb)}});
  }
  doc["nonempty"] = list;
  return doc.dump(2) + "\n";
}

std::string cross_check_json(const verify::CrossCheckReport& rep) {
  json doc{{"n_lo", rep.n_lo},
           {"n_hi", rep.n_hi},
           {"classes_checked", rep.classes_checked},
           {"ok", rep.ok()},
           {"mismatches", rep.mismatches}};
  return doc.dump(2) + "\n";
}

std::string long_count_json(const verify::LongCountReport& rep) {
  json pairs = json::array();
  for (const auto& [key, count] : rep.pair_counts)
    pairs.push_back(json{{"p", key.first}, {"q", key.second}, {"count", count}});
  json doc{{"n_max", rep.n_max},
           {"ok", rep.ok()},
           {"pairs", pairs},
           {"violations", rep.violations}};
  return doc.dump(2) + "\n";
}

std::string un_action_json(const verify::UnActionReport& rep) {
  json doc{{"n_max", rep.n_max},
           {"actions_checked", rep.actions_checked},
           {"ok", rep.ok()},
           {"counterexamples", rep.counterexamples}};
  return doc.dump(2) + "\n";
}

}  // namespace homometry::serialize
