// kcrystal: command-line driver.
#include <algorithm>
#include <iostream>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include "kcrystal/document.hpp"
#include "kcrystal/render.hpp"

using namespace kcrystal;

namespace {

constexpr int kExitDiscrepancy = 1;
constexpr int kExitNotFound = 2;
constexpr int kExitError = 3;

size_t display_width(const std::string& s) {
  size_t n = 0;
  for (unsigned char c : s)
    n += (c & 0xC0) != 0x80;
  return n;
}

std::string pad(const std::string& s, size_t w) {
  size_t n = display_width(s);
  return s + std::string(w > n ? w - n : 0, ' ');
}

// rows of cells, columns aligned
void print_table(std::ostream& os, const std::vector<std::vector<std::string>>& rows) {
  std::vector<size_t> w;
  for (auto& r : rows)
    for (size_t i = 0; i < r.size(); ++i) {
      if (w.size() <= i)
        w.push_back(0);
      w[i] = std::max(w[i], display_width(r[i]));
    }
  for (auto& r : rows) {
    std::string line;
    for (size_t i = 0; i < r.size(); ++i)
      line += (i ? " | " : "") + (i + 1 < r.size() ? pad(r[i], w[i]) : r[i]);
    os << line << '\n';
  }
}

std::string join(const std::vector<std::string>& xs, const char* sep) {
  std::string s;
  for (size_t i = 0; i < xs.size(); ++i)
    s += (i ? sep : "") + xs[i];
  return s;
}

std::string describe_fixed(const FixedSet& f) {
  switch (f.kind) {
    case FixedSet::Kind::Empty: return "empty";
    case FixedSet::Kind::All: return f.space == Mode::Plane ? "R^2" : "T^2";
    case FixedSet::Kind::Points: {
      std::vector<std::string> xs;
      for (auto& p : f.points)
        xs.push_back(to_string(p));
      return join(xs, " ");
    }
    case FixedSet::Kind::Lines: {
      std::vector<std::string> xs;
      for (auto& l : f.lines)
        xs.push_back(to_string(l.base) + "+R" + to_string(l.dir));
      return join(xs, " ");
    }
  }
  return "?";
}

std::string describe_centralizer(const GroupSpec& spec, const Centralizer& c) {
  std::vector<std::string> parts;
  for (auto& h : c.finite_parts)
    parts.push_back(element_label(spec, h));
  std::string fin = "{" + join(parts, ", ") + "}";
  if (c.trans_rank == 2)
    return "Z^2 + " + fin;
  if (c.trans_rank == 1)
    return "<" + to_string(c.trans_basis.at(0)) + "> + " + fin;
  return fin;
}

void print_khom(std::ostream& os, const GroupSpec& spec, const KResult& r) {
  os << r.group << " (" << mode_name(r.mode) << ")\n";
  std::vector<std::vector<std::string>> rows(6);
  rows[0] = {"representative"};
  rows[1] = {"X^g"};
  rows[2] = {"C(g)"};
  rows[3] = {"X^g/C(g)"};
  rows[4] = {"even"};
  rows[5] = {"odd"};
  for (auto& t : r.per_class) {
    rows[0].push_back(t.cls.label);
    rows[1].push_back(describe_fixed(t.fixed));
    rows[2].push_back(describe_centralizer(spec, t.centralizer));
    rows[3].push_back(t.quotient.description());
    rows[4].push_back(to_string(t.even));
    rows[5].push_back(to_string(t.odd));
  }
  print_table(os, rows);
  os << "K0 = " << to_string(r.K0) << "\nK1 = " << to_string(r.K1) << '\n';
}

void print_report(std::ostream& os, const VerificationReport& rep, bool verbose) {
  os << rep.group << " (" << mode_name(rep.fixture.mode) << "): "
     << (rep.ok() ? "OK" : "FAIL") << "  K0 = " << to_string(rep.computed.K0)
     << ", K1 = " << to_string(rep.computed.K1) << "  [" << rep.count(ItemStatus::Match)
     << " match, " << rep.count(ItemStatus::ExpectedDiscrepancy) << " expected, "
     << rep.count(ItemStatus::Note) << " notes, " << rep.count(ItemStatus::Discrepancy)
     << " discrepancies]\n";
  for (auto& it : rep.items) {
    if (!verbose && it.status == ItemStatus::Match)
      continue;
    os << "  " << status_name(it.status) << ": " << level_name(it.level) << ' ' << it.label
       << ' ' << it.field << ": table " << it.table << "; computed " << it.computed;
    if (!it.detail.empty())
      os << " (" << it.detail << ')';
    os << '\n';
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// the class named by a label: a class label, or any element of the class
const ConjClass& find_class(const GroupSpec& spec, const std::vector<ConjClass>& fc,
                            Mode mode, const std::string& label) {
  for (auto& c : fc)
    if (c.label == label)
      return c;
  if (mode == Mode::Plane) {
    if (auto g = parse_element_label(spec, label); g && order(*g).plane) {
      AffineIso rep = canonical_rep(spec, *g);
      for (auto& c : fc)
        if (c.rep == rep)
          return c;
    }
  } else if (size_t d = spec.find_label(label); d != GroupSpec::npos) {
    for (auto& c : fc)
      if (std::find(c.members.begin(), c.members.end(), d) != c.members.end())
        return c;
  }
  throw NotFound("no finite-order class " + label + " in " + spec.name);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant K-homology of the wallpaper groups"};
  app.require_subcommand(1);
  std::string name, mode_str = "plane", label, svg_path, fixtures_path;
  bool json = false, rational = false, all = false, verbose = false;
  int cells = 3;
  const std::vector<std::string> modes{"plane", "torus"};

  auto* list = app.add_subcommand("list", "the 17 groups and their point-group orders");
  list->add_flag("--json", json);

  auto* info = app.add_subcommand("info", "catalog record of one group");
  info->add_option("name", name)->required();
  info->add_flag("--json", json);

  auto* fc = app.add_subcommand("fc", "conjugacy classes of finite-order elements");
  fc->add_option("name", name)->required();
  fc->add_option("--mode", mode_str)->check(CLI::IsMember(modes));
  fc->add_flag("--json", json);

  auto* fixed = app.add_subcommand("fixed", "fixed set, centralizer and quotient of one class");
  fixed->add_option("name", name)->required();
  fixed->add_option("--class", label)->required();
  fixed->add_option("--mode", mode_str)->check(CLI::IsMember(modes));

  auto* khom = app.add_subcommand("khom", "K_0 and K_1");
  khom->add_option("name", name)->required();
  khom->add_option("--mode", mode_str)->check(CLI::IsMember(modes));
  khom->add_flag("--rational", rational, "free ranks only");
  khom->add_flag("--json", json);

  auto* verify = app.add_subcommand("verify", "compare against the reference tables");
  verify->add_option("name", name);
  verify->add_flag("--all", all);
  verify->add_flag("--json", json);
  verify->add_flag("--verbose", verbose, "list matching items too");
  verify->add_option("--fixtures", fixtures_path, "alternative fixtures file");

  auto* render = app.add_subcommand("render", "SVG diagram of the symmetry elements");
  render->add_option("name", name)->required();
  render->add_option("--svg", svg_path)->required();
  render->add_option("--cells", cells)->check(CLI::Range(1, 12));

  auto* cat = app.add_subcommand("catalog", "catalog data");
  auto* dump = cat->add_subcommand("dump", "print the catalog in its text format");
  cat->require_subcommand(1);

  CLI11_PARSE(app, argc, argv);

  try {
    Mode mode = parse_mode(mode_str);
    std::ostream& os = std::cout;
    if (*list) {
      if (json) {
        OutputDocument doc;
        doc.kind = "group_list";
        doc.payload = nlohmann::ordered_json::array();
        for (auto& s : full_catalog())
          doc.payload.push_back({{"name", s.name},
                                 {"point_group_order", s.size()},
                                 {"symmorphic", s.symmorphic()}});
        os << render_document(doc);
      } else {
        for (auto& s : full_catalog())
          os << pad(s.name, 6) << ' ' << s.size() << '\n';
      }
    } else if (*info) {
      const GroupSpec& s = catalog(name);
      if (json) {
        os << render_document(make_document(s));
      } else {
        os << s.name << ": point group of order " << s.size()
           << (s.symmorphic() ? ", symmorphic" : ", nonsymmorphic") << '\n'
           << "lattice: " << s.lattice_hint << '\n';
        std::vector<std::vector<std::string>> rows{{"element", "kind", "order", "pullback"}};
        for (auto& e : s.elements)
          rows.push_back({e.label, kind_name(e.kind), std::to_string(e.lin_order),
                          to_string(e.pullback)});
        print_table(os, rows);
      }
    } else if (*fc) {
      const GroupSpec& s = catalog(name);
      auto classes = enumerate_fc(s, mode);
      if (json) {
        os << render_document(make_document(classes));
      } else {
        std::vector<std::vector<std::string>> rows{{"class", "order", "kind", "where"}};
        for (auto& c : classes) {
          std::string where = "-";
          if (mode == Mode::Torus) {
            std::vector<std::string> m;
            for (size_t d : c.members)
              m.push_back(s[d].label);
            where = "{" + join(m, ", ") + "}";
          } else if (c.kind == ClassKind::Rotation) {
            where = "centre " + to_string(c.center);
          } else if (c.kind == ClassKind::Reflection) {
            where = "axis " + to_string(c.axis.base) + "+R" + to_string(c.axis.dir);
          }
          rows.push_back({c.label, std::to_string(c.order), kind_name(c.kind), where});
        }
        print_table(os, rows);
      }
    } else if (*fixed) {
      const GroupSpec& s = catalog(name);
      auto classes = enumerate_fc(s, mode);
      const ConjClass& c = find_class(s, classes, mode, label);
      ClassTerm t = class_term(s, c);
      os << "class      " << c.label << " (" << kind_name(c.kind) << ", "
         << mode_name(mode) << ")\n"
         << "X^g        " << kind_name(t.fixed.kind) << ": " << describe_fixed(t.fixed) << '\n'
         << "C(g)       " << describe_centralizer(s, t.centralizer) << '\n'
         << "X^g/C(g)   " << t.quotient.description() << '\n';
      for (size_t k = 0; k < t.quotient.homology.size(); ++k)
        os << "H" << k << "         " << to_string(t.quotient.homology[k]) << '\n';
    } else if (*khom) {
      const GroupSpec& s = catalog(name);
      KResult r = k_homology(s, mode);
      if (rational) {
        auto [r0, r1] = rationalize(r);
        if (json) {
          OutputDocument doc;
          doc.kind = "k_rational";
          doc.payload = {{"group", r.group}, {"mode", mode_name(mode)},
                         {"rank_K0", r0}, {"rank_K1", r1}};
          os << render_document(doc);
        } else {
          os << r.group << " (" << mode_name(mode) << ", rational)\n"
             << "rank K0 = " << r0 << "\nrank K1 = " << r1 << '\n';
        }
      } else if (json) {
        os << render_document(make_document(r));
      } else {
        print_khom(os, s, r);
      }
    } else if (*verify) {
      if (all && !name.empty())
        throw CLI::ValidationError("verify", "give either --all or a group name");
      std::vector<GroupFixture> fx = fixtures_path.empty()
                                         ? shipped_fixtures()
                                         : parse_fixtures(read_file(fixtures_path));
      if (!name.empty())
        catalog(name);
      auto reports = verify_against_tables(fx, name);
      if (json) {
        os << render_document(make_document(reports));
      } else {
        for (auto& r : reports)
          print_report(os, r, verbose);
      }
      for (auto& r : reports)
        if (!r.ok())
          return kExitDiscrepancy;
    } else if (*render) {
      write_svg(catalog(name), svg_path, cells);
    } else if (*dump) {
      os << format_catalog(full_catalog());
    }
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const NotFound& e) {
    std::cerr << "kcrystal: " << e.what() << '\n';
    return kExitNotFound;
  } catch (const std::exception& e) {
    std::cerr << "kcrystal: " << e.what() << '\n';
    return kExitError;
  }
  return 0;
}
