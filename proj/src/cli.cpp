#include "nesto/cli.hpp"

#include <CLI11.hpp>

#include "nesto/checks.hpp"
#include "nesto/encodings.hpp"
#include "nesto/json_io.hpp"

namespace nesto {

namespace {

void emit(std::ostream& out, const Json& j) { out << j.dump() << "\n"; }

Json read_json(std::istream& in) {
  try {
    Json j;
    in >> j;
    return j;
  } catch (const Json::exception& e) {
    throw domain_error("MalformedInput", e.what());
  }
}

int cmd_enumerate(const std::string& tag, const std::string& carrier_spec,
                  int max_nodes, std::ostream& out) {
  UniversePtr u = make_universe(tag);
  VSet carrier = parse_carrier(carrier_spec);
  auto h = u->member(carrier);
  if (!h)
    throw domain_error("NotInUniverse",
                       "the carrier is not a member of universe " + tag);
  Json list = Json::array();
  long long count = 0;
  for (const Construct& c : enumerate_constructs(*h)) {
    if (max_nodes > 0 && static_cast<int>(c.node_count()) > max_nodes) continue;
    list.push_back(construct_to_json(c));
    ++count;
  }
  Json j;
  j["universe"] = tag;
  j["carrier"] = carrier;
  j["count"] = count;
  j["constructs"] = std::move(list);
  emit(out, j);
  return 0;
}

int cmd_counts(const std::string& tag, const std::string& carrier_spec,
               std::ostream& out) {
  UniversePtr u = make_universe(tag);
  VSet carrier = parse_carrier(carrier_spec);
  auto h = u->member(carrier);
  if (!h)
    throw domain_error("NotInUniverse",
                       "the carrier is not a member of universe " + tag);
  auto by_nodes = count_by_nodes(*h);
  long long total = 0;
  for (long long c : by_nodes) total += c;
  Json j;
  j["by_nodes"] = by_nodes;
  j["total"] = total;
  emit(out, j);
  return 0;
}

int cmd_product(bool nonrecursive, bool have_q, long long at_q, std::istream& in,
                std::ostream& out) {
  Delegation d = delegation_from_json(read_json(in));
  LinearConstruct result =
      nonrecursive ? shuffle_nonrecursive(d) : shuffle(d);
  if (have_q) result = evaluate_q(result, BigInt(at_q));
  emit(out, linear_to_json(result));
  return 0;
}

int cmd_trio(bool have_q, long long at_q, std::istream& in, std::ostream& out) {
  Delegation d = delegation_from_json(read_json(in));
  TrioResult t = trio(d);
  if (have_q) {
    t.prec = evaluate_q(t.prec, BigInt(at_q));
    t.dot = evaluate_q(t.dot, BigInt(at_q));
    t.succ = evaluate_q(t.succ, BigInt(at_q));
  }
  Json j;
  j["prec"] = linear_to_json(t.prec);
  j["dot"] = linear_to_json(t.dot);
  j["succ"] = linear_to_json(t.succ);
  emit(out, j);
  return 0;
}

int cmd_check(const std::string& suite, const std::string& tag, int max_carrier,
              std::uint64_t seed, int iterations, std::ostream& out) {
  CheckReport rep = run_check(suite, tag, max_carrier, seed, iterations);
  Json j;
  j["suite"] = suite;
  j["universe"] = tag;
  j["ok"] = rep.ok;
  j["cases"] = rep.cases;
  if (!rep.ok) j["counterexample"] = rep.counterexample;
  emit(out, j);
  return rep.ok ? 0 : 1;
}

int cmd_encode(const std::string& format, const std::string& carrier_spec,
               std::istream& in, std::ostream& out) {
  VSet carrier = parse_carrier(carrier_spec);
  Construct c = construct_from_json(read_json(in));
  Json j;
  if (format == "packed") {
    j = permutohedron_encode(c, carrier);
  } else if (format == "cubeword") {
    j = hypercube_encode(c, carrier);
  } else if (format == "schroeder") {
    j = associahedron_encode(c, carrier).to_string();
  } else {
    throw domain_error("MalformedInput", "unknown format: " + format);
  }
  emit(out, j);
  return 0;
}

int cmd_decode(const std::string& format, const std::string& carrier_spec,
               std::istream& in, std::ostream& out) {
  VSet carrier = parse_carrier(carrier_spec);
  Json j = read_json(in);
  Construct c;
  if (format == "packed") {
    if (!j.is_array())
      throw domain_error("MalformedInput", "packed words are integer arrays");
    c = permutohedron_decode(j.get<PackedWord>(), carrier);
  } else if (format == "cubeword") {
    c = hypercube_decode(j.get<std::string>(), carrier);
  } else if (format == "schroeder") {
    c = associahedron_decode(SchroederTree::parse(j.get<std::string>()), carrier);
  } else {
    throw domain_error("MalformedInput", "unknown format: " + format);
  }
  emit(out, construct_to_json(c));
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in,
            std::ostream& out) {
  CLI::App app{"Shuffle products on the faces of hypergraph polytopes"};
  app.require_subcommand(1);

  std::string universe = "gamma:inf";
  std::string carrier;
  std::string suite;
  std::string format;
  int max_nodes = 0;
  int max_carrier = 6;
  int iterations = 200;
  std::uint64_t seed = 1;
  long long at_q = 0;
  bool nonrecursive = false;

  auto* enumerate = app.add_subcommand("enumerate", "List constructs (faces)");
  enumerate->add_option("--universe", universe)->required();
  enumerate->add_option("--carrier", carrier)->required();
  enumerate->add_option("--max-nodes", max_nodes);

  auto* counts = app.add_subcommand("counts", "Count constructs by node count");
  counts->add_option("--universe", universe)->required();
  counts->add_option("--carrier", carrier)->required();

  auto* product =
      app.add_subcommand("product", "Shuffle product of a delegation (stdin)");
  auto* at_q_opt = product->add_option("--at-q", at_q, "Evaluate q");
  product->add_flag("--nonrecursive", nonrecursive);

  auto* trio_cmd =
      app.add_subcommand("trio", "Binary trio of a delegation (stdin)");
  auto* trio_q_opt = trio_cmd->add_option("--at-q", at_q, "Evaluate q");

  auto* check = app.add_subcommand("check", "Run an equation-check suite");
  check->add_option("--suite", suite)->required();
  check->add_option("--universe", universe)->required();
  check->add_option("--max-carrier", max_carrier);
  check->add_option("--seed", seed);
  check->add_option("--iterations", iterations);

  auto* encode = app.add_subcommand("encode", "Encode a construct (stdin)");
  encode->add_option("--format", format)->required();
  encode->add_option("--carrier", carrier)->required();

  auto* decode = app.add_subcommand("decode", "Decode to a construct (stdin)");
  decode->add_option("--format", format)->required();
  decode->add_option("--carrier", carrier)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help and friends
      std::exit(app.exit(e));
    }
    Json j;
    j["error"] = {{"code", "MalformedInput"}, {"message", e.what()}};
    emit(out, j);
    return 2;
  }

  try {
    if (enumerate->parsed()) return cmd_enumerate(universe, carrier, max_nodes, out);
    if (counts->parsed()) return cmd_counts(universe, carrier, out);
    if (product->parsed())
      return cmd_product(nonrecursive, at_q_opt->count() > 0, at_q, in, out);
    if (trio_cmd->parsed())
      return cmd_trio(trio_q_opt->count() > 0, at_q, in, out);
    if (check->parsed())
      return cmd_check(suite, universe, max_carrier, seed, iterations, out);
    if (encode->parsed()) return cmd_encode(format, carrier, in, out);
    if (decode->parsed()) return cmd_decode(format, carrier, in, out);
  } catch (const domain_error& e) {
    Json j;
    j["error"] = {{"code", e.code()}, {"message", e.what()}};
    emit(out, j);
    return e.code() == "MalformedInput" ? 2 : 1;
  } catch (const std::exception& e) {
    Json j;
    j["error"] = {{"code", "MalformedInput"}, {"message", e.what()}};
    emit(out, j);
    return 2;
  }
  return 0;
}

}  // namespace nesto
