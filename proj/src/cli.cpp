#include "maxvar/cli.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <CLI11.hpp>
#include <cerrno>
#include <chrono>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <regex>
#include <set>
#include <sstream>

#include "maxvar/error.hpp"
#include "maxvar/linalg.hpp"
#include "maxvar/variation.hpp"

namespace maxvar::cli {

using json = nlohmann::ordered_json;

std::string form_hash(const HomogeneousForm& f) {
  std::string key = "n=" + std::to_string(f.dimension()) + ";" + f.to_string();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : key) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream hex;
  hex << std::hex << std::setw(16) << std::setfill('0') << h;
  return hex.str();
}

namespace {

// Holds an flock for the lifetime of the object.
class LockedFile {
 public:
  LockedFile(const std::string& path, int flags, int lock) {
    fd_ = ::open(path.c_str(), flags, 0644);
    if (fd_ < 0) return;
    if (::flock(fd_, lock) != 0) {
      ::close(fd_);
      fd_ = -1;
    }
  }
  ~LockedFile() {
    if (fd_ >= 0) {
      ::flock(fd_, LOCK_UN);
      ::close(fd_);
    }
  }
  LockedFile(const LockedFile&) = delete;
  LockedFile& operator=(const LockedFile&) = delete;

  int fd() const { return fd_; }

 private:
  int fd_ = -1;
};

CacheEntry parse_cache_line(const std::string& line, std::size_t line_no) {
  auto bad = [&](const std::string& why) {
    return Error(ErrorCode::FormatError, "cache line " + std::to_string(line_no) + ": " + why);
  };
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error&) {
    throw bad("not valid JSON");
  }
  try {
    CacheEntry e;
    e.form_hash = j.at("form_hash").get<std::string>();
    e.prime = j.at("prime").get<std::uint64_t>();
    e.degree = j.at("degree").get<int>();
    e.dim = j.at("dim").get<std::uint64_t>();
    return e;
  } catch (const json::exception&) {
    throw bad("expected form_hash, prime, degree and dim");
  }
}

}  // namespace

std::vector<CacheEntry> read_cache(const std::string& path) {
  LockedFile file(path, O_RDONLY, LOCK_SH);
  if (file.fd() < 0) {
    if (errno == ENOENT) return {};
    throw Error(ErrorCode::InvalidArgument, "cannot read cache " + path + ": " + std::strerror(errno));
  }
  std::string text;
  char buffer[1 << 14];
  for (;;) {
    ssize_t got = ::read(file.fd(), buffer, sizeof buffer);
    if (got < 0) throw Error(ErrorCode::InvalidArgument, "cannot read cache " + path);
    if (got == 0) break;
    text.append(buffer, static_cast<std::size_t>(got));
  }
  std::vector<CacheEntry> out;
  std::istringstream lines(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse_cache_line(line, line_no));
  }
  return out;
}

void append_cache(const std::string& path, const std::vector<CacheEntry>& entries) {
  if (entries.empty()) return;
  std::string text;
  for (const CacheEntry& e : entries) {
    json j = {{"form_hash", e.form_hash}, {"prime", e.prime}, {"degree", e.degree}, {"dim", e.dim}};
    text += j.dump() + "\n";
  }
  LockedFile file(path, O_WRONLY | O_APPEND | O_CREAT, LOCK_EX);
  if (file.fd() < 0) throw Error(ErrorCode::InvalidArgument, "cannot open cache " + path + ": " + std::strerror(errno));
  std::size_t done = 0;
  while (done < text.size()) {
    ssize_t wrote = ::write(file.fd(), text.data() + done, text.size() - done);
    if (wrote < 0) {
      if (errno == EINTR) continue;
      throw Error(ErrorCode::InvalidArgument, "cannot write cache " + path);
    }
    done += static_cast<std::size_t>(wrote);
  }
}

std::string stable_json(const std::string& report) {
  json j = json::parse(report);
  j.erase("timings_ms");
  j.erase("cache");
  return j.dump();
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

struct Options {
  std::uint64_t prime = kDefaultPrime;
  std::uint64_t seed = 0;
  int trials = 3;
  std::string format = "text";
  std::string cache;
  std::string file;
  std::vector<int> fermat;
  int n = -1;
  int e = 1;
};

void add_format(CLI::App* sub, std::string& format) {
  sub->add_option("--format", format, "report format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
}

void add_common(CLI::App* sub, Options& o, bool with_twist) {
  sub->add_option("file", o.file, "form file; '#' lines are comments, '# n=N' sets the number of variables");
  sub->add_option("--fermat", o.fermat, "use x0^D + ... + xN^D")->expected(2)->type_name("N D");
  sub->add_option("-n", o.n, "projective dimension for a form file (variables x0..xn)");
  sub->add_option("--prime", o.prime, "prime modulus below 2^62")->capture_default_str();
  sub->add_option("--seed", o.seed, "master seed for sampled multipliers")->capture_default_str();
  sub->add_option("--trials", o.trials, "samples per rank certificate")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_format(sub, o.format);
  sub->add_option("--cache", o.cache, "JSON-lines cache of graded dimensions");
  if (with_twist) sub->add_option("-e", o.e, "twist O(e)")->check(CLI::PositiveNumber)->capture_default_str();
}

struct Input {
  HomogeneousForm form;
  json description;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

// Blanks comment lines in place so parser offsets still point into the file.
int strip_comments(std::string& text) {
  static const std::regex header(R"(^\s*#\s*n\s*=\s*(\d+)\s*$)");
  int header_n = -1;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    std::size_t first = text.find_first_not_of(" \t\r", pos);
    if (first < end && text[first] == '#') {
      std::smatch match;
      std::string line = text.substr(pos, end - pos);
      if (std::regex_match(line, match, header)) header_n = std::stoi(match[1].str());
      std::fill(text.begin() + static_cast<std::ptrdiff_t>(pos), text.begin() + static_cast<std::ptrdiff_t>(end), ' ');
    }
    pos = end + 1;
  }
  return header_n;
}

std::string location(const std::string& text, std::size_t offset) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return std::to_string(line) + ":" + std::to_string(column);
}

Input load_input(const Options& o, const PrimeField& field) {
  bool have_file = !o.file.empty();
  bool have_fermat = !o.fermat.empty();
  if (have_file == have_fermat) throw Error(ErrorCode::InvalidArgument, "give exactly one of a form file or --fermat N D");
  std::optional<HomogeneousForm> form;
  json description;
  if (have_fermat) {
    int n = o.fermat[0];
    int d = o.fermat[1];
    if (n < 1 || n > kMaxDimension) {
      throw Error(ErrorCode::VariableOutOfRange, "--fermat needs 1 <= N <= " + std::to_string(kMaxDimension));
    }
    if (d < 1) throw Error(ErrorCode::DegreeTooSmall, "--fermat needs D >= 1");
    form = fermat_form(field, n, d);
    description["fermat"] = {n, d};
  } else {
    std::string text = read_file(o.file);
    int header_n = strip_comments(text);
    if (o.n >= 0 && header_n >= 0 && o.n != header_n) {
      throw Error(ErrorCode::InvalidArgument, "-n " + std::to_string(o.n) + " contradicts the file header n=" +
                                                  std::to_string(header_n));
    }
    int n = o.n >= 0 ? o.n : header_n;
    if (n < 0) {
      throw Error(ErrorCode::InvalidArgument, "number of variables unknown: pass -n N or start the file with '# n=N'");
    }
    if (n > kMaxDimension) throw Error(ErrorCode::VariableOutOfRange, "n must be at most " + std::to_string(kMaxDimension));
    try {
      form = parse_form(text, n, field);
    } catch (const ParseError& e) {
      throw Error(e.code(), o.file + ":" + location(text, e.position()) + ": " + e.what());
    }
    description["file"] = o.file;
  }
  if (field.modulus() <= static_cast<std::uint64_t>(form->degree())) {
    throw Error(ErrorCode::FieldTooSmall, "prime " + std::to_string(field.modulus()) + " must exceed the degree " +
                                              std::to_string(form->degree()));
  }
  if (!euler_check(*form)) throw Error(ErrorCode::VerificationFailed, "Euler identity fails on the parsed form");
  description["n"] = form->dimension();
  description["d"] = form->degree();
  description["form"] = form->to_string();
  return Input{std::move(*form), std::move(description)};
}

struct CacheSession {
  std::string path;
  std::string hash;
  std::uint64_t prime = 0;
  std::set<int> known;
};

std::optional<CacheSession> open_cache(const Options& o, JacobianRing& ring) {
  if (o.cache.empty()) return std::nullopt;
  CacheSession session{o.cache, form_hash(ring.form()), ring.field().modulus(), {}};
  for (const CacheEntry& entry : read_cache(o.cache)) {
    if (entry.form_hash != session.hash || entry.prime != session.prime) continue;
    ring.preload_dimension(entry.degree, entry.dim);
    session.known.insert(entry.degree);
  }
  return session;
}

json close_cache(const std::optional<CacheSession>& session, const JacobianRing& ring) {
  std::vector<CacheEntry> fresh;
  for (int p = 0; p < ring.built_degrees(); ++p) {
    if (session->known.count(p)) continue;
    fresh.push_back({session->hash, session->prime, p, ring.graded_dim(p)});
  }
  append_cache(session->path, fresh);
  std::set<int> hits = ring.cache_hits();
  return {{"path", session->path},
          {"form_hash", session->hash},
          {"hits", std::vector<int>(hits.begin(), hits.end())},
          {"appended", fresh.size()}};
}

json header(const char* command, const json& input, const Options& o, std::uint64_t prime) {
  return {{"command", command},
          {"input", input},
          {"config", {{"prime", prime}, {"seed", o.seed}, {"trials", o.trials}}}};
}

json bound_json(const FailureBound& b) {
  return {{"required_rank", b.required_rank},
          {"prime", b.modulus},
          {"trials", b.trials},
          {"expression", b.expression()},
          {"value", b.value()}};
}

template <typename T>
std::string join(const std::vector<T>& values) {
  std::string out;
  for (const T& v : values) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

std::string describe_input(const json& input) {
  std::string out = input.at("form").get<std::string>();
  out += " (n=" + std::to_string(input.at("n").get<int>()) + ", d=" + std::to_string(input.at("d").get<int>()) + ")";
  return out;
}

void finish(json& report, const std::optional<CacheSession>& cache, const JacobianRing* ring, Clock::time_point start) {
  if (cache) report["cache"] = close_cache(cache, *ring);
  report["timings_ms"] = {{"total", elapsed_ms(start)}};
}

void print_cache_text(const json& report, std::ostream& out) {
  if (!report.contains("cache")) return;
  out << "cache: " << report["cache"]["path"].get<std::string>() << ", hits at degrees "
      << join(report["cache"]["hits"].get<std::vector<int>>()) << ", " << report["cache"]["appended"].get<std::size_t>()
      << " entries appended\n";
}

int cmd_hilbert(const Options& o, std::ostream& out) {
  auto start = Clock::now();
  PrimeField field(o.prime);
  Input in = load_input(o, field);
  JacobianRing ring(in.form);
  auto cache = open_cache(o, ring);
  SmoothnessCertificate cert = ring.certify_smooth();
  std::vector<std::uint64_t> dims = cert.hilbert.coefficients;
  if (cert.certified()) dims.push_back(cert.dim_past_socle);
  std::vector<std::uint64_t> ranks;
  for (std::size_t p = 0; p < dims.size(); ++p) {
    ranks.push_back(monomial_count(ring.dimension(), static_cast<int>(p)) - dims[p]);
  }
  std::vector<std::uint64_t> expected = ci_hilbert_coefficients(ring.dimension(), ring.degree());

  json report = header("hilbert", in.description, o, field.modulus());
  report["verdict"] = cert.certified() ? "Certified" : "NotCertified";
  report["dims"] = dims;
  report["rank"] = ranks;
  report["details"] = {{"socle_degree", cert.socle_degree},
                       {"dim_past_socle", cert.dim_past_socle},
                       {"expected", expected}};
  finish(report, cache, &ring, start);

  if (o.format == "json") {
    out << report.dump(2) << "\n";
  } else {
    out << "form: " << describe_input(in.description) << "\n";
    out << "prime: " << field.modulus() << "\n";
    out << "dim R_p for p = 0.." << dims.size() - 1 << ": " << join(dims) << "\n";
    out << "complete-intersection values: " << join(expected) << "\n";
    out << "socle degree: " << cert.socle_degree << "\n";
    if (cert.certified()) {
      out << "smoothness: certified (dim R_" << cert.socle_degree + 1 << " = 0)\n";
    } else {
      out << "smoothness: not certified at prime " << field.modulus() << " (dim R_" << cert.socle_degree + 1 << " = "
          << cert.dim_past_socle << "); a singular reduction mod p is possible, retry with another --prime\n";
    }
    print_cache_text(report, out);
  }
  return cert.certified() ? kOk : kNotCertified;
}

json verdict_json(const RankVerdict& v) {
  json j = {{"p", v.target_degree},
            {"source_dim", v.source_dim},
            {"target_dim", v.target_dim},
            {"required_rank", v.required_rank},
            {"best_rank", v.best_rank},
            {"outcome", to_string(v.outcome)},
            {"trials_used", v.trials_used}};
  if (v.h) j["multiplier"] = v.h->to_string();
  return j;
}

json witness_json(const RankVerdict& v) {
  return {{"degree", v.target_degree - v.e}, {"form", v.witness->to_string()}, {"multiplier", v.h->to_string()}};
}

int cmd_wlp(const Options& o, std::ostream& out) {
  auto start = Clock::now();
  PrimeField field(o.prime);
  Input in = load_input(o, field);
  JacobianRing ring(in.form);
  auto cache = open_cache(o, ring);
  SmoothnessCertificate cert = ring.certify_smooth();
  json report = header("wlp", in.description, o, field.modulus());
  if (!cert.certified()) {
    std::vector<std::uint64_t> dims = cert.hilbert.coefficients;
    report["verdict"] = "SmoothnessNotCertified";
    report["dims"] = dims;
    report["rank"] = nullptr;
    report["details"] = {{"socle_degree", cert.socle_degree}, {"dim_past_socle", cert.dim_past_socle}};
    finish(report, cache, &ring, start);
    if (o.format == "json") {
      out << report.dump(2) << "\n";
    } else {
      out << "form: " << describe_input(in.description) << "\n";
      out << "smoothness: not certified at prime " << field.modulus() << " (dim R_" << cert.socle_degree + 1 << " = "
          << cert.dim_past_socle << "); retry with another --prime\n";
      print_cache_text(report, out);
    }
    return kSmoothnessNotCertified;
  }
  WlpReport sweep = wlp_sweep(ring, o.trials, o.seed);
  std::vector<std::uint64_t> ranks;
  json degrees = json::array();
  const RankVerdict* worst = nullptr;
  const RankVerdict* first_witness = nullptr;
  for (const RankVerdict& v : sweep.degrees) {
    ranks.push_back(v.best_rank);
    degrees.push_back(verdict_json(v));
    if (v.failure_bound && (!worst || v.failure_bound->value() > worst->failure_bound->value())) worst = &v;
    if (v.witness && !first_witness) first_witness = &v;
  }
  report["verdict"] = sweep.holds() ? "WeakLefschetzCertified" : "NoEvidence";
  report["dims"] = cert.hilbert.coefficients;
  report["rank"] = ranks;
  if (worst) report["failure_bound"] = bound_json(*worst->failure_bound);
  if (first_witness) report["witness"] = witness_json(*first_witness);
  report["details"] = {{"shared_multiplier", sweep.shared_ell.to_string()},
                       {"shared_multiplier_sufficed", sweep.shared_ell_sufficed},
                       {"degrees", degrees}};
  finish(report, cache, &ring, start);

  if (o.format == "json") {
    out << report.dump(2) << "\n";
  } else {
    out << "form: " << describe_input(in.description) << "\n";
    out << "prime: " << field.modulus() << ", seed " << o.seed << ", trials " << o.trials << "\n";
    out << "dim R_p: " << join(cert.hilbert.coefficients) << "\n";
    for (const RankVerdict& v : sweep.degrees) {
      out << "  x l: R_" << v.target_degree - 1 << " (" << v.source_dim << ") -> R_" << v.target_degree << " ("
          << v.target_dim << "): rank " << v.best_rank << " of " << v.required_rank << ", " << to_string(v.outcome)
          << "\n";
    }
    out << "shared multiplier " << (sweep.shared_ell_sufficed ? "sufficed" : "fell short") << ": "
        << sweep.shared_ell.to_string() << "\n";
    if (worst) {
      out << "failure bound: " << worst->failure_bound->expression() << " = " << worst->failure_bound->value() << "\n";
    }
    if (first_witness) {
      out << "kernel witness in degree " << first_witness->target_degree - 1 << ": "
          << first_witness->witness->to_string() << "\n";
    }
    out << "verdict: " << (sweep.holds() ? "weak Lefschetz property certified in all degrees" : "NoEvidence") << "\n";
    print_cache_text(report, out);
  }
  return sweep.holds() ? kOk : kNotCertified;
}

int cmd_maxvar(GeometryKind kind, const Options& o, std::ostream& out) {
  auto start = Clock::now();
  PrimeField field(o.prime);
  Input in = load_input(o, field);
  JacobianRing ring(in.form);
  auto cache = open_cache(o, ring);
  VariationReport r = kind == GeometryKind::Hypersurface ? maxvar_hypersurface(ring, o.e, o.trials, o.seed)
                                                         : maxvar_double_cover(ring, o.e, o.trials, o.seed);
  json report = header("maxvar", in.description, o, field.modulus());
  report["input"]["kind"] = to_string(kind);
  report["input"]["e"] = o.e;
  report["verdict"] = to_string(r.verdict);
  if (r.source_dim) {
    report["dims"] = {{"source_degree", *r.source_degree},
                      {"source", *r.source_dim},
                      {"target_degree", ring.degree()},
                      {"target", *r.target_dim}};
  } else {
    report["dims"] = nullptr;
  }
  report["rank"] = r.rank ? json(*r.rank) : json(nullptr);
  if (r.failure_bound) report["failure_bound"] = bound_json(*r.failure_bound);
  if (r.witness) report["witness"] = witness_json(*r.ring_verdict);
  json details = {{"criterion", r.criterion}, {"detail", r.detail}, {"notes", r.notes}};
  if (r.ring_verdict) details["ring_verdict"] = verdict_json(*r.ring_verdict);
  report["details"] = details;
  finish(report, cache, &ring, start);

  if (o.format == "json") {
    out << report.dump(2) << "\n";
  } else {
    out << "maxvar " << to_string(kind) << ", e = " << o.e << "\n";
    out << "form: " << describe_input(in.description) << "\n";
    out << "prime: " << field.modulus() << ", seed " << o.seed << ", trials " << o.trials << "\n";
    out << "criterion: " << r.criterion << "\n";
    if (r.source_dim) {
      out << "map: R_" << *r.source_degree << " (" << *r.source_dim << ") -> R_" << ring.degree() << " ("
          << *r.target_dim << ")";
      if (r.rank) out << ", rank " << *r.rank;
      out << "\n";
    }
    if (r.failure_bound) out << "failure bound: " << r.failure_bound->expression() << " = " << r.failure_bound->value() << "\n";
    if (r.witness) out << "kernel witness G: " << r.witness->to_string() << "\n";
    out << "verdict: " << to_string(r.verdict);
    if (!r.detail.empty()) out << " (" << r.detail << ")";
    out << "\n";
    for (const std::string& note : r.notes) out << "note: " << note << "\n";
    print_cache_text(report, out);
  }
  switch (r.verdict) {
    case VariationVerdict::MaximalVariationCertified:
    case VariationVerdict::TriviallyCertified: return kOk;
    case VariationVerdict::NoEvidence: return kNotCertified;
    case VariationVerdict::PreconditionViolated: return kPreconditionViolated;
    case VariationVerdict::SmoothnessNotCertified: return kSmoothnessNotCertified;
  }
  return kInputError;
}

int cmd_rank_oracle(const std::string& path, const std::string& format, std::ostream& out) {
  auto start = Clock::now();
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read " + path);
  FieldMatrix m = read_matrix_dump(in);
  std::size_t fast = rank(m.to_sparse());
  std::size_t oracle = dense_rank_oracle(m);
  bool agree = fast == oracle;
  json report = {{"command", "rank-oracle"},
                 {"input", {{"file", path}}},
                 {"config", {{"prime", m.field().modulus()}, {"seed", nullptr}, {"trials", nullptr}}},
                 {"verdict", agree ? "agree" : "mismatch"},
                 {"dims", {{"rows", m.rows()}, {"cols", m.cols()}}},
                 {"rank", {{"sparse", fast}, {"dense", oracle}}}};
  report["timings_ms"] = {{"total", elapsed_ms(start)}};
  if (format == "json") {
    out << report.dump(2) << "\n";
  } else {
    out << path << ": " << m.rows() << " x " << m.cols() << " over F_" << m.field().modulus() << "\n";
    out << "sparse rank " << fast << ", dense oracle rank " << oracle << ": " << (agree ? "agree" : "MISMATCH") << "\n";
  }
  return agree ? kOk : kNotCertified;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maximal variation criteria through Jacobian rings over prime fields", "maxvar"};
  app.require_subcommand(1);

  Options hilbert_opts;
  Options wlp_opts;
  Options hyper_opts;
  Options cover_opts;
  std::string oracle_file;
  std::string oracle_format = "text";

  CLI::App* hilbert = app.add_subcommand("hilbert", "Hilbert function of the Jacobian ring and smoothness certificate");
  add_common(hilbert, hilbert_opts, false);
  CLI::App* wlp = app.add_subcommand("wlp", "weak Lefschetz sweep over all degrees");
  add_common(wlp, wlp_opts, false);
  CLI::App* maxvar_cmd = app.add_subcommand("maxvar", "maximal variation criterion");
  maxvar_cmd->require_subcommand(1);
  CLI::App* hyper = maxvar_cmd->add_subcommand("hypersurface", "the linear system |O_X(e)| on F = 0");
  add_common(hyper, hyper_opts, true);
  CLI::App* cover = maxvar_cmd->add_subcommand("double-cover", "double cover branched along F = 0");
  add_common(cover, cover_opts, true);
  CLI::App* oracle = app.add_subcommand("rank-oracle", "compare sparse rank with the dense oracle on a matrix dump");
  oracle->add_option("dump", oracle_file, "matrix dump file")->required();
  add_format(oracle, oracle_format);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (hilbert->parsed()) return cmd_hilbert(hilbert_opts, out);
    if (wlp->parsed()) return cmd_wlp(wlp_opts, out);
    if (hyper->parsed()) return cmd_maxvar(GeometryKind::Hypersurface, hyper_opts, out);
    if (cover->parsed()) return cmd_maxvar(GeometryKind::DoubleCover, cover_opts, out);
    if (oracle->parsed()) return cmd_rank_oracle(oracle_file, oracle_format, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << " [" << to_string(e.code()) << "]\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace maxvar::cli
