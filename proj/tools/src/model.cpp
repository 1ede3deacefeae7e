#include "ixcli/model.hpp"

#include <cctype>
#include <optional>
#include <set>
#include <sstream>

#include "ix/error.hpp"

namespace ix::cli {

// --- ModelFile ---------------------------------------------------------------

namespace {

const char* kind_name(ObjectKind k) {
  switch (k) {
    case ObjectKind::space:
      return "space";
    case ObjectKind::istruct:
      return "istruct";
    case ObjectKind::subset:
      return "subset";
    case ObjectKind::relation:
      return "relation";
    case ObjectKind::preorder:
      return "preorder";
  }
  return "object";
}

template <typename Map>
const typename Map::mapped_type& lookup(const Map& m, const std::string& name, ObjectKind k) {
  auto it = m.find(name);
  if (it == m.end()) throw Error(std::string("unknown ") + kind_name(k) + " '" + name + "'");
  return it->second;
}

}  // namespace

void ModelFile::declare(ObjectKind kind, const std::string& name, bool exists) {
  if (exists) throw Error(std::string("duplicate ") + kind_name(kind) + " '" + name + "'");
  order_.emplace_back(kind, name);
}

void ModelFile::add_space(SpacePtr space) {
  declare(ObjectKind::space, space->name(), has_space(space->name()));
  spaces_.emplace(space->name(), std::move(space));
}

void ModelFile::add_istruct(InteractionStructure w) {
  declare(ObjectKind::istruct, w.name(), has_istruct(w.name()));
  const std::string name = w.name();
  istructs_.emplace(name, std::move(w));
}

void ModelFile::add_subset(std::string name, Subset u) {
  declare(ObjectKind::subset, name, subsets_.count(name) != 0);
  subsets_.emplace(std::move(name), std::move(u));
}

void ModelFile::add_relation(std::string name, Relation r) {
  declare(ObjectKind::relation, name, relations_.count(name) != 0);
  relations_.emplace(std::move(name), std::move(r));
}

void ModelFile::add_preorder(std::string name, const Relation& r) {
  declare(ObjectKind::preorder, name, preorders_.count(name) != 0);
  preorders_.emplace(std::move(name), r.rtc());
}

SpacePtr ModelFile::space(const std::string& name) const {
  return lookup(spaces_, name, ObjectKind::space);
}
const InteractionStructure& ModelFile::istruct(const std::string& name) const {
  return lookup(istructs_, name, ObjectKind::istruct);
}
const Subset& ModelFile::subset(const std::string& name) const {
  return lookup(subsets_, name, ObjectKind::subset);
}
const Relation& ModelFile::relation(const std::string& name) const {
  return lookup(relations_, name, ObjectKind::relation);
}
const Relation& ModelFile::preorder(const std::string& name) const {
  return lookup(preorders_, name, ObjectKind::preorder);
}

std::vector<std::string> ModelFile::istruct_names() const {
  std::vector<std::string> out;
  for (const auto& [k, n] : order_) {
    if (k == ObjectKind::istruct) out.push_back(n);
  }
  return out;
}

void add_with_spaces(ModelFile& model, const InteractionStructure& w) {
  for (const SpacePtr& sp : {w.source(), w.target()}) {
    if (!model.has_space(sp->name())) {
      model.add_space(sp);
    } else if (!same_space(model.space(sp->name()), sp)) {
      throw SpaceMismatch("space '" + sp->name() + "' already declared with other states");
    }
  }
  model.add_istruct(w);
}

// --- lexer -------------------------------------------------------------------

namespace {

bool is_delim(char c) {
  return std::isspace(static_cast<unsigned char>(c)) || c == '{' || c == '}' || c == '(' ||
         c == ')' || c == ',' || c == '#' || c == '"' || c == ':';
}

enum class Tok { word, quoted, punct, arrow, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      if (pos_ >= text_.size()) {
        out.push_back({Tok::end, "", line_, col_});
        return out;
      }
      const std::size_t l = line_, c = col_;
      const char ch = text_[pos_];
      if (ch == '{' || ch == '}' || ch == '(' || ch == ')' || ch == ',' || ch == ':') {
        advance();
        out.push_back({Tok::punct, std::string(1, ch), l, c});
      } else if (ch == '"') {
        out.push_back({Tok::quoted, quoted(), l, c});
      } else if (text_.substr(pos_, 2) == "->") {
        advance();
        advance();
        out.push_back({Tok::arrow, "->", l, c});
      } else {
        std::string w;
        while (pos_ < text_.size() && !is_delim(text_[pos_]) && text_.substr(pos_, 2) != "->") {
          w += text_[pos_];
          advance();
        }
        out.push_back({Tok::word, std::move(w), l, c});
      }
    }
  }

private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else if ((static_cast<unsigned char>(text_[pos_]) & 0xC0) != 0x80) {
      ++col_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      const char ch = text_[pos_];
      if (ch == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        advance();
      } else {
        return;
      }
    }
  }

  std::string quoted() {
    const std::size_t l = line_, c = col_;
    advance();
    std::string out;
    while (pos_ < text_.size() && text_[pos_] != '"') {
      if (text_[pos_] == '\n') break;
      if (text_[pos_] == '\\') {
        advance();
        if (pos_ >= text_.size()) break;
        if (text_[pos_] != '"' && text_[pos_] != '\\') {
          throw ParseError(line_, col_, "unknown escape in quoted name");
        }
      }
      out += text_[pos_];
      advance();
    }
    if (pos_ >= text_.size() || text_[pos_] != '"') {
      throw ParseError(l, c, "unterminated quoted name");
    }
    advance();
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

// --- parser ------------------------------------------------------------------

class Parser {
public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  ModelFile run() {
    while (peek().kind != Tok::end) {
      const Token& t = peek();
      if (t.kind != Tok::word) fail(t, "expected a declaration keyword");
      if (t.text == "space") {
        space_decl();
      } else if (t.text == "istruct") {
        istruct_decl();
      } else if (t.text == "subset") {
        subset_decl();
      } else if (t.text == "relation") {
        relation_decl();
      } else if (t.text == "preorder") {
        preorder_decl();
      } else {
        fail(t, "unknown declaration '" + t.text + "'");
      }
    }
    return std::move(model_);
  }

private:
  [[noreturn]] static void fail(const Token& t, const std::string& msg) {
    throw ParseError(t.line, t.column, msg);
  }

  const Token& peek() const { return toks_[pos_]; }
  const Token& take() {
    const Token& t = toks_[pos_];
    if (t.kind != Tok::end) ++pos_;
    return t;
  }

  void expect_word(const char* w) {
    const Token& t = take();
    if (t.kind != Tok::word || t.text != w) fail(t, std::string("expected '") + w + "'");
  }
  void expect_punct(char c) {
    const Token& t = take();
    if (t.kind != Tok::punct || t.text[0] != c) fail(t, std::string("expected '") + c + "'");
  }
  bool at_punct(char c) const { return peek().kind == Tok::punct && peek().text[0] == c; }

  const Token& name() {
    const Token& t = take();
    if (t.kind != Tok::word && t.kind != Tok::quoted) fail(t, "expected a name");
    if (t.kind == Tok::word && t.text.empty()) fail(t, "expected a name");
    return t;
  }

  SpacePtr space_ref() {
    const Token& t = name();
    if (!model_.has_space(t.text)) fail(t, "unknown space '" + t.text + "'");
    return model_.space(t.text);
  }

  StateIndex state_ref(const SpacePtr& sp) {
    const Token& t = name();
    auto idx = sp->index_of(t.text);
    if (!idx) fail(t, "unknown state '" + t.text + "' in space '" + sp->name() + "'");
    return *idx;
  }

  template <typename F>
  void guarded(const Token& at, F&& f) {
    try {
      f();
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      fail(at, e.what());
    }
  }

  void space_decl() {
    take();
    const Token& n = name();
    expect_punct('{');
    std::vector<std::string> states;
    std::set<std::string> seen;
    while (!at_punct('}')) {
      const Token& s = name();
      if (!seen.insert(s.text).second) fail(s, "duplicate state '" + s.text + "'");
      states.push_back(s.text);
    }
    take();
    guarded(n, [&] { model_.add_space(make_space(n.text, std::move(states))); });
  }

  void istruct_decl() {
    take();
    const Token& n = name();
    expect_word("on");
    SpacePtr src = space_ref();
    SpacePtr tgt = src;
    if (peek().kind == Tok::word && peek().text == "to") {
      take();
      tgt = space_ref();
    }
    expect_punct('{');
    StructureData data{n.text, src, tgt, {}};
    data.commands.resize(src->size());
    std::vector<bool> seen_state(src->size(), false);
    while (!at_punct('}')) {
      expect_word("state");
      const Token& st = peek();
      const StateIndex s = state_ref(src);
      if (seen_state[s]) fail(st, "state '" + st.text + "' listed twice");
      seen_state[s] = true;
      expect_punct('{');
      while (!at_punct('}')) {
        expect_word("cmd");
        const Token& a = name();
        for (const Command& c : data.commands[s]) {
          if (c.name == a.text) fail(a, "duplicate command '" + a.text + "'");
        }
        Command cmd{a.text, {}};
        expect_punct('{');
        while (!at_punct('}')) {
          const Token& d = name();
          for (const Response& r : cmd.responses) {
            if (r.name == d.text) fail(d, "duplicate response '" + d.text + "'");
          }
          const Token& arrow = take();
          if (arrow.kind != Tok::arrow) fail(arrow, "expected '->'");
          cmd.responses.push_back({d.text, state_ref(tgt)});
        }
        take();
        data.commands[s].push_back(std::move(cmd));
      }
      take();
    }
    take();
    if (model_.has_istruct(n.text)) fail(n, "duplicate istruct '" + n.text + "'");
    guarded(n, [&] { model_.add_istruct(InteractionStructure(std::move(data))); });
  }

  void subset_decl() {
    take();
    const Token& n = name();
    expect_word("in");
    SpacePtr sp = space_ref();
    expect_punct('{');
    Subset u(sp);
    while (!at_punct('}')) u.insert(state_ref(sp));
    take();
    guarded(n, [&] { model_.add_subset(n.text, std::move(u)); });
  }

  Relation pairs(const SpacePtr& dom, const SpacePtr& cod) {
    expect_punct('{');
    Relation r(dom, cod);
    while (!at_punct('}')) {
      expect_punct('(');
      const StateIndex a = state_ref(dom);
      expect_punct(',');
      const StateIndex b = state_ref(cod);
      expect_punct(')');
      r.insert(a, b);
    }
    take();
    return r;
  }

  void relation_decl() {
    take();
    const Token& n = name();
    expect_punct(':');
    SpacePtr dom = space_ref();
    const Token& arrow = take();
    if (arrow.kind != Tok::arrow) fail(arrow, "expected '->'");
    SpacePtr cod = space_ref();
    Relation r = pairs(dom, cod);
    guarded(n, [&] { model_.add_relation(n.text, std::move(r)); });
  }

  void preorder_decl() {
    take();
    const Token& n = name();
    expect_word("on");
    SpacePtr sp = space_ref();
    Relation r = pairs(sp, sp);
    guarded(n, [&] { model_.add_preorder(n.text, r); });
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  ModelFile model_;
};

}  // namespace

ModelFile parse_model(std::string_view text) { return Parser(Lexer(text).run()).run(); }

// --- printer -----------------------------------------------------------------

std::string quote_name(const std::string& name) {
  bool plain = !name.empty() && name.find("->") == std::string::npos;
  for (char c : name) {
    if (is_delim(c)) plain = false;
  }
  if (plain) return name;
  std::string out = "\"";
  for (char c : name) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

namespace {

void print_pairs(std::ostringstream& os, const Relation& r) {
  os << " {";
  for (const auto& [a, b] : r.pairs()) {
    os << " (" << quote_name(r.domain()->state_name(a)) << ","
       << quote_name(r.codomain()->state_name(b)) << ")";
  }
  os << " }\n";
}

}  // namespace

std::string print_model(const ModelFile& model) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [kind, name] : model.order()) {
    if (!first) os << "\n";
    first = false;
    switch (kind) {
      case ObjectKind::space: {
        const SpacePtr sp = model.space(name);
        os << "space " << quote_name(name) << " {";
        for (const auto& s : sp->states()) os << " " << quote_name(s);
        os << " }\n";
        break;
      }
      case ObjectKind::istruct: {
        const InteractionStructure& w = model.istruct(name);
        os << "istruct " << quote_name(name) << " on " << quote_name(w.source()->name());
        if (!w.homogeneous()) os << " to " << quote_name(w.target()->name());
        os << " {\n";
        for (std::size_t s = 0; s < w.source()->size(); ++s) {
          if (w.command_count(s) == 0) continue;
          os << "  state " << quote_name(w.source()->state_name(s)) << " {\n";
          for (const Command& c : w.commands(s)) {
            os << "    cmd " << quote_name(c.name) << " {";
            for (const Response& r : c.responses) {
              os << " " << quote_name(r.name) << " -> "
                 << quote_name(w.target()->state_name(r.next));
            }
            os << " }\n";
          }
          os << "  }\n";
        }
        os << "}\n";
        break;
      }
      case ObjectKind::subset: {
        const Subset& u = model.subset(name);
        os << "subset " << quote_name(name) << " in " << quote_name(u.space()->name()) << " {";
        u.for_each([&](StateIndex s) { os << " " << quote_name(u.space()->state_name(s)); });
        os << " }\n";
        break;
      }
      case ObjectKind::relation: {
        const Relation& r = model.relation(name);
        os << "relation " << quote_name(name) << " : " << quote_name(r.domain()->name())
           << " -> " << quote_name(r.codomain()->name());
        print_pairs(os, r);
        break;
      }
      case ObjectKind::preorder: {
        const Relation& r = model.preorder(name);
        os << "preorder " << quote_name(name) << " on " << quote_name(r.domain()->name());
        print_pairs(os, r);
        break;
      }
    }
  }
  return os.str();
}

}  // namespace ix::cli
