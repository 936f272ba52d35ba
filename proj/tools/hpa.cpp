// hpa: command-line front end for the hpa library.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "hpa/pipeline.hpp"

namespace {

struct Options {
  std::string field;
  std::string format = "json";
  std::string out;
  std::string bundle_path;
  std::string id;
  std::string mode;
  bool partial = false;
  bool global = false;
};

enum class Cmd { verify, globalize, smash, bm, cm, convert, ex_list, ex_run, ex_export };

void write(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw hpa::ParseError("cannot write '" + o.out + "'");
  f << text;
}

template <hpa::ExactField K>
int dispatch(Cmd cmd, const Options& o, const hpa::json& raw) {
  using namespace hpa;
  if (cmd == Cmd::ex_export) {
    write(o, raw.dump(2) + "\n");
    return 0;
  }
  auto b = Bundle<K>::from_json(raw);
  Report r;
  switch (cmd) {
    case Cmd::verify: r = run_verify(b); break;
    case Cmd::globalize: r = run_globalize(b, o.mode); break;
    case Cmd::smash: r = run_smash(b, o.partial); break;
    case Cmd::bm: r = run_duality(b, false); break;
    case Cmd::cm: r = run_duality(b, true); break;
    case Cmd::convert: r = run_convert(b); break;
    case Cmd::ex_run:
      r = run_example(b);
      r.data["id"] = o.id;
      break;
    default: break;
  }
  write(o, r.emit(o.format));
  return r.ok() ? 0 : 1;
}

template <hpa::ExactField K>
int run_in_field(Cmd cmd, const Options& o, const std::optional<hpa::json>& file) {
  hpa::json raw = file ? *file : hpa::fixture_bundle<K>(o.id);
  raw["field"] = K::field_name();
  return dispatch<K>(cmd, o, raw);
}

int run(Cmd cmd, const Options& o) {
  using namespace hpa;
  if (cmd == Cmd::ex_list) {
    if (o.format == "json")
      write(o, json(fixture_ids()).dump(2) + "\n");
    else {
      std::string s;
      for (const auto& id : fixture_ids()) s += id + "\n";
      write(o, s);
    }
    return 0;
  }
  if (cmd == Cmd::smash && o.partial == o.global) throw ParseError("smash needs exactly one of --partial, --global");
  std::optional<json> file;
  if (!o.bundle_path.empty() && !o.id.empty()) throw ParseError("give a bundle path or --id, not both");
  if (!o.bundle_path.empty())
    file = load_json_file(o.bundle_path);
  else if (o.id.empty())
    throw ParseError("missing bundle path or --id");
  std::string field = o.field;
  if (field.empty()) field = file && file->is_object() && file->contains("field") ? file->at("field").get<std::string>() : "q";
  auto spec = FieldSpec::parse(field);
  if (spec.characteristic == 0) return run_in_field<Rational>(cmd, o, file);
  ModP::Scope scope(spec.characteristic);
  return run_in_field<ModP>(cmd, o, file);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partial (co)actions of finite-dimensional Hopf algebras: globalization and duality"};
  app.require_subcommand(1);
  Options o;
  Cmd cmd = Cmd::verify;
  app.add_option("--field", o.field, "q or fp:<p> (default: the bundle's field, else q)");
  app.add_option("--format", o.format, "json or human")->check(CLI::IsMember({"json", "human"}));
  app.add_option("--out", o.out, "write the report to a file");

  auto input = [&](CLI::App* sub) {
    sub->fallthrough();
    sub->add_option("bundle", o.bundle_path, "JSON bundle");
    sub->add_option("--id", o.id, "built-in fixture id");
  };
  auto* verify = app.add_subcommand("verify", "verify every structure present in a bundle");
  input(verify);
  verify->callback([&] { cmd = Cmd::verify; });
  auto* glob = app.add_subcommand("globalize", "enveloping action or coaction");
  input(glob);
  glob->add_option("--mode", o.mode)->required()->check(CLI::IsMember({"action", "coaction"}));
  glob->callback([&] { cmd = Cmd::globalize; });
  auto* smash = app.add_subcommand("smash", "partial or global smash product");
  input(smash);
  smash->add_flag("--partial", o.partial);
  smash->add_flag("--global", o.global);
  smash->callback([&] { cmd = Cmd::smash; });
  auto* duality = app.add_subcommand("duality", "Blattner-Montgomery and Cohen-Montgomery maps");
  duality->fallthrough();
  duality->require_subcommand(1);
  auto* bm = duality->add_subcommand("bm", "general Hopf case");
  input(bm);
  bm->callback([&] { cmd = Cmd::bm; });
  auto* cm = duality->add_subcommand("cm", "group case");
  input(cm);
  cm->callback([&] { cmd = Cmd::cm; });
  auto* convert = app.add_subcommand("convert", "partial coaction <-> partial action of the dual");
  input(convert);
  convert->callback([&] { cmd = Cmd::convert; });
  auto* examples = app.add_subcommand("examples", "built-in fixtures");
  examples->fallthrough();
  examples->require_subcommand(1);
  examples->add_subcommand("list")->fallthrough()->callback([&] { cmd = Cmd::ex_list; });
  auto* ex_run = examples->add_subcommand("run", "run every applicable pipeline on a fixture");
  ex_run->fallthrough();
  ex_run->add_option("--id", o.id)->required();
  ex_run->callback([&] { cmd = Cmd::ex_run; });
  auto* ex_export = examples->add_subcommand("export", "print a fixture as a bundle");
  ex_export->fallthrough();
  ex_export->add_option("--id", o.id)->required();
  ex_export->callback([&] { cmd = Cmd::ex_export; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    return run(cmd, o);
  } catch (const hpa::VerificationFailure& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return 1;
  } catch (const hpa::AssociativityFailure& e) {
    std::cerr << "associativity failed: " << e.what() << "\n";
    return 1;
  } catch (const hpa::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const hpa::json::exception& e) {
    std::cerr << "error: malformed bundle: " << e.what() << "\n";
    return 2;
  }
}
