#include <fstream>
#include <sstream>

#include "gpsa/dfao.hpp"
#include "gpsa/io.hpp"
#include "gpsa/text.hpp"

namespace gpsa {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), Err::Format, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  require(out.good(), Err::Format, "cannot write " + path);
  out << content;
}

namespace {

std::string modulus_str(const Field& f) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < f.modulus().size(); ++i) {
    if (i) os << ',';
    os << f.modulus()[i];
  }
  os << ']';
  return os.str();
}

std::vector<uint32_t> parse_modulus(const std::string& text) {
  require(text.size() >= 2 && text.front() == '[' && text.back() == ']', Err::Format,
          "bad modulus: " + text);
  std::vector<uint32_t> out;
  for (const std::string& tok : split_on(text.substr(1, text.size() - 2), ',')) {
    uint32_t v;
    require(parse_u32(tok, v), Err::Format, "bad modulus coefficient: " + text);
    out.push_back(v);
  }
  return out;
}

struct KV {
  std::string key, value;
};

std::vector<KV> parse_kvs(const std::vector<std::string>& toks, size_t from) {
  std::vector<KV> out;
  for (size_t i = from; i < toks.size(); ++i) {
    auto eq = toks[i].find('=');
    require(eq != std::string::npos, Err::Format, "expected key=value, got " + toks[i]);
    out.push_back({toks[i].substr(0, eq), toks[i].substr(eq + 1)});
  }
  return out;
}

}  // namespace

std::string field_header(const Field& f) {
  std::ostringstream os;
  os << "field p=" << f.p() << " e=" << f.e();
  if (f.e() > 1) os << " modulus=" << modulus_str(f);
  return os.str();
}

FieldPtr parse_field_header(const std::vector<std::string>& toks) {
  require(!toks.empty() && toks[0] == "field", Err::Format, "expected field header");
  uint32_t p = 0, e = 0;
  std::vector<uint32_t> modulus;
  bool have_p = false, have_e = false, have_mod = false;
  for (const KV& kv : parse_kvs(toks, 1)) {
    if (kv.key == "p") {
      require(parse_u32(kv.value, p), Err::Format, "bad p");
      have_p = true;
    } else if (kv.key == "e") {
      require(parse_u32(kv.value, e), Err::Format, "bad e");
      have_e = true;
    } else if (kv.key == "modulus") {
      modulus = parse_modulus(kv.value);
      have_mod = true;
    } else {
      fail(Err::Format, "unknown field key: " + kv.key);
    }
  }
  require(have_p && have_e, Err::Format, "field header needs p and e");
  if (e == 1) {
    require(!have_mod, Err::Format, "modulus is implied for e=1");
    return Field::make(p, 1);
  }
  require(have_mod, Err::Format, "field header needs a modulus for e>1");
  return Field::make(p, e, modulus);
}

std::string write_dfao(const Dfao& a) {
  std::ostringstream os;
  os << "dfao v1\n";
  os << field_header(*a.field) << '\n';
  os << "alphabet digits p=" << a.alphabet.base << " radix="
     << (a.alphabet.radix ? "true" : "false") << '\n';
  os << "semantics " << semantics_name(a.semantics) << '\n';
  os << "states " << a.state_count() << '\n';
  os << "initial " << a.initial << '\n';
  for (uint32_t s = 0; s < a.state_count(); ++s)
    os << "output " << s << ' ' << a.field->format(a.outputs[s]) << '\n';
  for (uint32_t s = 0; s < a.state_count(); ++s)
    for (uint32_t sym = 0; sym < a.alphabet.size(); ++sym) {
      os << "trans " << s << ' ';
      if (a.alphabet.radix && sym == a.alphabet.dot())
        os << '.';
      else
        os << sym;
      os << ' ' << a.step(s, sym) << '\n';
    }
  return os.str();
}

Dfao parse_dfao(const std::string& text) {
  std::istringstream is(text);
  std::string raw;
  std::vector<std::vector<std::string>> lines;
  while (std::getline(is, raw)) {
    std::string s = strip_comment(raw);
    if (s.empty()) continue;
    lines.push_back(split_ws(s));
  }
  size_t at = 0;
  auto next = [&]() -> const std::vector<std::string>& {
    require(at < lines.size(), Err::Format, "truncated dfao file");
    return lines[at++];
  };

  {
    const auto& l = next();
    require(l.size() == 2 && l[0] == "dfao" && l[1] == "v1", Err::Format,
            "expected 'dfao v1' header");
  }
  Dfao a;
  a.field = parse_field_header(next());
  {
    const auto& l = next();
    require(l.size() >= 2 && l[0] == "alphabet" && l[1] == "digits", Err::Format,
            "expected alphabet line");
    uint32_t base = 0;
    bool radix = false, have_base = false, have_radix = false;
    for (const KV& kv : parse_kvs(l, 2)) {
      if (kv.key == "p") {
        require(parse_u32(kv.value, base), Err::Format, "bad alphabet base");
        have_base = true;
      } else if (kv.key == "radix") {
        require(kv.value == "true" || kv.value == "false", Err::Format, "bad radix flag");
        radix = kv.value == "true";
        have_radix = true;
      } else {
        fail(Err::Format, "unknown alphabet key: " + kv.key);
      }
    }
    require(have_base && have_radix, Err::Format, "alphabet line needs p and radix");
    a.alphabet = Alphabet{base, radix};
  }
  {
    const auto& l = next();
    require(l.size() == 2 && l[0] == "semantics", Err::Format, "expected semantics line");
    a.semantics = semantics_from_name(l[1]);
  }
  uint32_t nstates = 0;
  {
    const auto& l = next();
    require(l.size() == 2 && l[0] == "states" && parse_u32(l[1], nstates) && nstates > 0,
            Err::Format, "expected states line");
  }
  {
    const auto& l = next();
    require(l.size() == 2 && l[0] == "initial" && parse_u32(l[1], a.initial), Err::Format,
            "expected initial line");
  }
  a.outputs.assign(nstates, 0);
  for (uint32_t s = 0; s < nstates; ++s) {
    const auto& l = next();
    uint32_t idx;
    require(l.size() == 3 && l[0] == "output" && parse_u32(l[1], idx) && idx == s, Err::Format,
            "expected output line for state " + std::to_string(s));
    a.outputs[s] = a.field->parse(l[2]);
  }
  uint32_t nsym = a.alphabet.size();
  a.transitions.assign(static_cast<size_t>(nstates) * nsym, 0);
  for (uint32_t s = 0; s < nstates; ++s) {
    for (uint32_t sym = 0; sym < nsym; ++sym) {
      const auto& l = next();
      uint32_t sidx, target;
      require(l.size() == 4 && l[0] == "trans" && parse_u32(l[1], sidx) && sidx == s,
              Err::Format, "expected trans line for state " + std::to_string(s));
      uint32_t got_sym;
      if (l[2] == ".") {
        require(a.alphabet.radix, Err::Format, "radix transition in plain alphabet");
        got_sym = a.alphabet.dot();
      } else {
        require(parse_u32(l[2], got_sym), Err::Format, "bad transition symbol: " + l[2]);
      }
      require(got_sym == sym, Err::Format, "transition lines out of order");
      require(parse_u32(l[3], target), Err::Format, "bad transition target");
      a.transitions[s * nsym + sym] = target;
    }
  }
  require(at == lines.size(), Err::Format, "trailing content in dfao file");
  a.validate();
  return a;
}

Dfao load_dfao(const std::string& path) { return parse_dfao(read_file(path)); }

void save_dfao(const Dfao& a, const std::string& path) { write_file(path, write_dfao(a)); }

}  // namespace gpsa
