#include "pathmaj/index_file.hpp"

#include <array>
#include <istream>
#include <ostream>
#include <string>

namespace pathmaj {

namespace {

constexpr std::array<char, 8> kMagic = {'P', 'M', 'A', 'J', 'I', 'D', 'X', '\0'};

class Writer {
 public:
  explicit Writer(std::ostream& out) : out_(out) {}
  template <class T>
  void put(T value) {
    auto v = static_cast<std::make_unsigned_t<T>>(value);
    char buf[sizeof(T)];
    for (std::size_t i = 0; i < sizeof(T); ++i) {
      buf[i] = static_cast<char>(v & 0xFF);
      if constexpr (sizeof(T) > 1) v >>= 8;
    }
    out_.write(buf, sizeof(T));
  }
  void bytes(const char* p, std::size_t n) { out_.write(p, static_cast<std::streamsize>(n)); }

 private:
  std::ostream& out_;
};

class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}
  template <class T>
  T get() {
    unsigned char buf[sizeof(T)];
    if (!in_.read(reinterpret_cast<char*>(buf), sizeof(T))) throw IndexFormatError("index file is truncated");
    std::make_unsigned_t<T> v = 0;
    for (std::size_t i = sizeof(T); i-- > 0;) {
      if constexpr (sizeof(T) > 1) v <<= 8;
      v |= buf[i];
    }
    return static_cast<T>(v);
  }
  void bytes(char* p, std::size_t n) {
    if (!in_.read(p, static_cast<std::streamsize>(n))) throw IndexFormatError("index file is truncated");
  }

 private:
  std::istream& in_;
};

void write_header(Writer& w, IndexKind kind, const Threshold& tau, unsigned kappa, const LabeledTree& tree) {
  w.bytes(kMagic.data(), kMagic.size());
  w.put<std::uint32_t>(kIndexFormatVersion);
  w.put<std::uint8_t>(static_cast<std::uint8_t>(kind));
  w.put<std::uint64_t>(tau.num());
  w.put<std::uint64_t>(tau.den());
  w.put<std::uint32_t>(kappa);
  w.put<std::uint64_t>(tree.size());
  w.put<std::uint64_t>(tree.sigma());
  for (NodeId u = 1; u <= tree.size(); ++u) {
    w.put<std::uint32_t>(tree.parent(u));
    w.put<std::int64_t>(tree.original_label_of(u));
  }
}

void write_table(Writer& w, const CandidateTable& t) {
  w.put<std::uint8_t>(static_cast<std::uint8_t>(t.encoding()));
  w.put<std::uint64_t>(t.owners().size());
  for (NodeId x : t.owners()) {
    w.put<std::uint32_t>(x);
    const std::size_t sets = t.set_count(x);
    w.put<std::uint32_t>(static_cast<std::uint32_t>(sets));
    for (std::size_t i = 0; i < sets; ++i) {
      const auto s = t.raw_set(x, i);
      w.put<std::uint32_t>(static_cast<std::uint32_t>(s.size()));
      for (std::uint32_t e : s) w.put<std::uint32_t>(e);
    }
  }
}

CandidateTable read_table(Reader& r, std::size_t n) {
  const auto enc = r.get<std::uint8_t>();
  if (enc > 1) throw IndexFormatError("unknown candidate encoding " + std::to_string(enc));
  CandidateTable t(n, static_cast<CandidateEncoding>(enc));
  const auto owners = r.get<std::uint64_t>();
  if (owners > n) throw IndexFormatError("more candidate owners than nodes");
  for (std::uint64_t k = 0; k < owners; ++k) {
    const auto x = r.get<std::uint32_t>();
    const auto sets = r.get<std::uint32_t>();
    if (sets > 64) throw IndexFormatError("implausible candidate set count");
    std::vector<std::vector<std::uint32_t>> raw(sets);
    for (auto& s : raw) {
      const auto size = r.get<std::uint32_t>();
      if (size > n) throw IndexFormatError("implausible candidate set size");
      s.resize(size);
      for (auto& e : s) e = r.get<std::uint32_t>();
    }
    try {
      t.add_owner_raw(x, raw);
    } catch (const std::exception& e) {
      throw IndexFormatError(std::string("bad candidate table: ") + e.what());
    }
  }
  return t;
}

}  // namespace

std::string_view index_kind_name(IndexKind kind) {
  switch (kind) {
    case IndexKind::kBasic: return "basic";
    case IndexKind::kStratified: return "stratified";
    case IndexKind::kStratifiedSuper: return "stratified-super";
  }
  return "?";
}

IndexKind parse_index_kind(std::string_view name) {
  for (IndexKind k : {IndexKind::kBasic, IndexKind::kStratified, IndexKind::kStratifiedSuper}) {
    if (index_kind_name(k) == name) return k;
  }
  throw std::invalid_argument("unknown index kind '" + std::string(name) + "'");
}

void save_index(std::ostream& out, const BasicMajorityIndex& index) {
  Writer w(out);
  write_header(w, IndexKind::kBasic, index.tau(), 0, index.context().tree());
  write_table(w, index.candidates());
}

void save_index(std::ostream& out, const StratifiedMajorityIndex& index) {
  Writer w(out);
  const IndexKind kind =
      index.mode() == StratifiedMode::kLinear ? IndexKind::kStratified : IndexKind::kStratifiedSuper;
  write_header(w, kind, index.tau(), index.requested_kappa(), index.context().tree());
  write_table(w, index.branching_table());
  write_table(w, index.smallest_table());
}

const Threshold& LoadedIndex::tau() const { return basic ? basic->tau() : stratified->tau(); }

MajorityResult LoadedIndex::query(NodeId u, NodeId v) const {
  return basic ? basic->query(u, v) : stratified->query(u, v);
}

LoadedIndex load_index(std::istream& in) {
  Reader r(in);
  std::array<char, 8> magic{};
  r.bytes(magic.data(), magic.size());
  if (magic != kMagic) throw IndexFormatError("not an index file (bad magic)");
  const auto version = r.get<std::uint32_t>();
  if (version != kIndexFormatVersion) {
    throw IndexFormatError("unsupported index format version " + std::to_string(version) + " (expected " +
                           std::to_string(kIndexFormatVersion) + ")");
  }
  const auto kind_byte = r.get<std::uint8_t>();
  if (kind_byte > 2) throw IndexFormatError("unknown index kind " + std::to_string(kind_byte));
  const auto num = r.get<std::uint64_t>();
  const auto den = r.get<std::uint64_t>();
  const auto kappa = r.get<std::uint32_t>();
  const auto n = r.get<std::uint64_t>();
  const auto sigma = r.get<std::uint64_t>();
  if (n == 0 || n >= UINT32_MAX) throw IndexFormatError("invalid node count");

  LoadedIndex out;
  out.kind = static_cast<IndexKind>(kind_byte);
  try {
    const Threshold tau(num, den);
    TreeInput input;
    input.parents.resize(n);
    input.labels.resize(n);
    for (std::uint64_t i = 0; i < n; ++i) {
      input.parents[i] = r.get<std::uint32_t>();
      input.labels[i] = r.get<std::int64_t>();
    }
    out.ctx = IndexedTree::make(build_tree(input));
    if (out.ctx->tree().sigma() != sigma) throw IndexFormatError("label count does not match the header");
    if (out.kind == IndexKind::kBasic) {
      out.basic = std::make_unique<BasicMajorityIndex>(out.ctx, tau, read_table(r, n));
    } else {
      CandidateTable branching = read_table(r, n);
      CandidateTable smallest = read_table(r, n);
      const auto mode = out.kind == IndexKind::kStratified ? StratifiedMode::kLinear : StratifiedMode::kSuperlinear;
      out.stratified = std::make_unique<StratifiedMajorityIndex>(out.ctx, tau, kappa, mode, std::move(branching),
                                                                  std::move(smallest));
    }
  } catch (const IndexFormatError&) {
    throw;
  } catch (const std::exception& e) {
    throw IndexFormatError(std::string("corrupt index file: ") + e.what());
  }
  return out;
}

}  // namespace pathmaj
