#include "synmon/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>
#include <variant>

#include "json.hpp"

namespace synmon {

  using json = nlohmann::ordered_json;

  namespace {
    json parse(std::string_view text, char const* what) {
      try {
        return json::parse(text);
      } catch (json::parse_error const& e) {
        throw ParseError(std::string(what) + ": " + e.what());
      }
    }

    std::string dump(json const& j) {
      return j.dump() + "\n";
    }

    json const& field(json const& j, char const* key, char const* what) {
      if (!j.is_object() || !j.contains(key)) {
        throw ParseError(std::string(what) + ": missing field \"" + key + "\"");
      }
      return j.at(key);
    }

    // Reads a non-negative integer that fits in index_t.
    index_t to_index(json const& j, std::string const& what) {
      if (!j.is_number_integer()) {
        throw ParseError(what + ": expected a non-negative integer");
      }
      auto const v = j.get<std::int64_t>();
      if (v < 0 || v > std::numeric_limits<index_t>::max()) {
        throw ParseError(what + ": " + std::to_string(v) + " is out of range");
      }
      return static_cast<index_t>(v);
    }

    std::vector<index_t> to_indices(json const& j, std::string const& what) {
      if (!j.is_array()) {
        throw ParseError(what + ": expected an array");
      }
      std::vector<index_t> result;
      for (auto const& e : j) {
        result.push_back(to_index(e, what));
      }
      return result;
    }

    std::vector<std::string> to_strings(json const& j, std::string const& what) {
      if (!j.is_array()) {
        throw ParseError(what + ": expected an array of strings");
      }
      std::vector<std::string> result;
      for (auto const& e : j) {
        if (!e.is_string()) {
          throw ParseError(what + ": expected an array of strings");
        }
        result.push_back(e.get<std::string>());
      }
      return result;
    }

    json table_json(FiniteSemigroup const& S) {
      json rows = json::array();
      for (index_t x = 0; x < S.size(); ++x) {
        rows.push_back(std::vector<index_t>(S.row(x).begin(), S.row(x).end()));
      }
      return rows;
    }
  }  // namespace

  std::string semigroup_to_json(FiniteSemigroup const& S) {
    json j;
    j["size"] = S.size();
    if (!S.labels().empty()) {
      j["labels"] = S.labels();
    }
    j["table"] = table_json(S);
    return dump(j);
  }

  FiniteSemigroup semigroup_from_json(std::string_view text) {
    char const* what  = "semigroup";
    auto const  j     = parse(text, what);
    auto const& table = field(j, "table", what);
    if (!table.is_array() || table.empty()) {
      throw ParseError("semigroup: \"table\" must be a nonempty array of rows");
    }
    std::vector<std::vector<index_t>> rows;
    for (std::size_t r = 0; r < table.size(); ++r) {
      if (!table[r].is_array()) {
        throw ParseError("semigroup: row " + std::to_string(r) + " is not an array");
      }
      std::vector<index_t> row;
      for (std::size_t c = 0; c < table[r].size(); ++c) {
        auto const& e = table[r][c];
        if (!e.is_number_integer()) {
          throw ParseError("semigroup: entry [" + std::to_string(r) + "]["
                           + std::to_string(c) + "] is not an integer");
        }
        auto const v = e.get<std::int64_t>();
        if (v < 0 || v >= static_cast<std::int64_t>(table.size())) {
          throw OutOfRangeEntry(r, c, v);
        }
        row.push_back(static_cast<index_t>(v));
      }
      rows.push_back(std::move(row));
    }
    if (j.contains("size") && to_index(j["size"], "semigroup size") != rows.size()) {
      throw ParseError("semigroup: \"size\" disagrees with the table");
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
      labels = to_strings(j["labels"], "semigroup labels");
    }
    return validate_semigroup(rows, std::move(labels));
  }

  std::string dfa_to_json(Dfa const& A) {
    json j;
    j["states"]   = A.state_count();
    j["alphabet"] = A.alphabet();
    j["initial"]  = A.initial();
    j["finals"]   = A.finals();
    j["delta"]    = A.delta();
    return dump(j);
  }

  Dfa dfa_from_json(std::string_view text) {
    char const* what = "automaton";
    auto const  j    = parse(text, what);
    auto const& d    = field(j, "delta", what);
    if (!d.is_array()) {
      throw ParseError("automaton: \"delta\" must be an array of rows");
    }
    std::vector<std::vector<index_t>> delta;
    for (auto const& row : d) {
      delta.push_back(to_indices(row, "automaton delta"));
    }
    return Dfa(to_index(field(j, "states", what), "automaton states"),
               to_strings(field(j, "alphabet", what), "automaton alphabet"),
               to_index(field(j, "initial", what), "automaton initial"),
               to_indices(field(j, "finals", what), "automaton finals"),
               std::move(delta));
  }

  std::string certificate_to_json(DisjunctiveCertificate const& cert) {
    json j;
    j["subset"] = cert.subset;
    j["mode"]   = to_string(cert.mode);
    json pairs  = json::array();
    for (auto const& p : cert.pairs) {
      json e;
      e["x"]    = p.x;
      e["y"]    = p.y;
      e["u"]    = p.u ? static_cast<std::int64_t>(*p.u) : -1;
      e["v"]    = p.v ? static_cast<std::int64_t>(*p.v) : -1;
      e["in_D"] = p.x_in_subset ? "x" : "y";
      pairs.push_back(std::move(e));
    }
    j["pairs"] = std::move(pairs);
    return dump(j);
  }

  DisjunctiveCertificate certificate_from_json(std::string_view text) {
    char const*            what = "certificate";
    auto const             j    = parse(text, what);
    DisjunctiveCertificate cert;
    cert.subset       = to_indices(field(j, "subset", what), "certificate subset");
    auto const& mode  = field(j, "mode", what);
    if (!mode.is_string()) {
      throw ParseError("certificate: \"mode\" must be a string");
    }
    cert.mode         = context_mode_from_string(mode.get<std::string>());
    auto const& pairs = field(j, "pairs", what);
    if (!pairs.is_array()) {
      throw ParseError("certificate: \"pairs\" must be an array");
    }
    auto side = [](json const& e) -> std::optional<index_t> {
      if (e.is_number_integer() && e.get<std::int64_t>() == -1) {
        return std::nullopt;
      }
      return to_index(e, "certificate context");
    };
    for (auto const& p : pairs) {
      auto const& in = field(p, "in_D", what);
      if (!in.is_string() || (in != "x" && in != "y")) {
        throw ParseError("certificate: \"in_D\" must be \"x\" or \"y\"");
      }
      cert.pairs.push_back({to_index(field(p, "x", what), "certificate x"),
                            to_index(field(p, "y", what), "certificate y"),
                            side(field(p, "u", what)),
                            side(field(p, "v", what)),
                            in == "x"});
    }
    return cert;
  }

  std::string bundle_to_json(APlusBn const& A) {
    json elements = json::array();
    for (index_t x = 0; x < A.elements.size(); ++x) {
      json e;
      std::visit(
          [&](auto const& k) {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, kind::Constant>) {
              e["kind"] = "constant";
              e["c"]    = k.c.to_string();
            } else if constexpr (std::is_same_v<K, kind::SingletonSupport>) {
              e["kind"] = "singleton";
              e["from"] = k.from.to_string();
              e["to"]   = k.to.to_string();
            } else if constexpr (std::is_same_v<K, kind::NSupport>) {
              e["kind"] = "nsupport";
              e["p"]    = k.p;
              e["q"]    = k.q;
              json sigma = json::array();
              for (index_t s : k.sigma) {
                sigma.push_back(s + 1);
              }
              e["sigma"] = std::move(sigma);
            } else {
              e["kind"] = "other";
            }
          },
          A.kinds[x]);
      e["label"] = A.label(x);
      elements.push_back(std::move(e));
    }
    json j;
    j["n"]         = A.n;
    j["elements"]  = std::move(elements);
    j["add_table"] = table_json(A.add_reduct);
    j["mul_table"] = table_json(A.mul_reduct);
    j["aff"]       = A.aff;
    return dump(j);
  }

  std::string read_file(std::filesystem::path const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error("cannot read " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }

  void write_file(std::filesystem::path const& path, std::string_view contents) {
    if (path.has_parent_path()) {
      std::error_code ec;
      std::filesystem::create_directories(path.parent_path(), ec);
    }
    std::ofstream out(path, std::ios::binary);
    out << contents;
    if (!out) {
      throw Error("cannot write " + path.string());
    }
  }

}  // namespace synmon
