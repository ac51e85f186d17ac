#include "rlvr/checkpoint.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rlvr {

namespace {

static_assert(std::endian::native == std::endian::little,
              "checkpoint writer assumes a little-endian host");

template <typename T>
void write_raw(std::ostream& out, T value) {
  out.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <typename T>
T read_raw(std::istream& in, const char* what) {
  T value{};
  if (!in.read(reinterpret_cast<char*>(&value), sizeof(T))) {
    throw std::runtime_error(std::string("checkpoint truncated while reading ") +
                             what);
  }
  return value;
}

}  // namespace

void save_checkpoint(const ToyPolicy& policy, const std::string& path,
                     const CheckpointMeta& meta) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write checkpoint: " + path);
  out.write(kCheckpointMagic, 8);
  write_raw<std::uint32_t>(out, kCheckpointVersion);
  write_raw<std::uint32_t>(out, static_cast<std::uint32_t>(policy.vocab_size()));
  write_raw<std::uint32_t>(out,
                           static_cast<std::uint32_t>(policy.context_width()));
  write_raw<std::uint32_t>(out, static_cast<std::uint32_t>(policy.embed_dim()));
  write_raw<std::uint64_t>(out, meta.step);
  out.write(reinterpret_cast<const char*>(policy.params().data()),
            static_cast<std::streamsize>(policy.params().size() *
                                         sizeof(double)));
  if (!out) throw std::runtime_error("I/O failure writing checkpoint: " + path);

  if (!meta.config_json.empty()) {
    std::ofstream sidecar(path + ".json");
    if (!sidecar) {
      throw std::runtime_error("cannot write checkpoint sidecar: " + path);
    }
    sidecar << meta.config_json << "\n";
  }
}

ToyPolicy load_checkpoint(const std::string& path, CheckpointMeta* meta) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open checkpoint: " + path);

  char magic[8] = {};
  if (!in.read(magic, 8) || std::memcmp(magic, kCheckpointMagic, 8) != 0) {
    throw std::runtime_error("bad checkpoint magic (expected RLVRCKPT): " +
                             path);
  }
  const auto version = read_raw<std::uint32_t>(in, "version");
  if (version != kCheckpointVersion) {
    std::ostringstream msg;
    msg << "unsupported checkpoint version " << version << " (expected "
        << kCheckpointVersion << ")";
    throw std::runtime_error(msg.str());
  }
  const auto vocab_size = read_raw<std::uint32_t>(in, "vocab size");
  const auto context_width = read_raw<std::uint32_t>(in, "context width");
  const auto embed_dim = read_raw<std::uint32_t>(in, "embed dim");
  const auto step = read_raw<std::uint64_t>(in, "step");

  const Vocab vocab = Vocab::standard();
  if (static_cast<int>(vocab_size) != vocab.size()) {
    std::ostringstream msg;
    msg << "checkpoint vocab size " << vocab_size
        << " does not match the standard vocabulary (" << vocab.size() << ")";
    throw std::runtime_error(msg.str());
  }
  if (context_width < 1 || context_width > 4096 || embed_dim < 1 ||
      embed_dim > 4096) {
    throw std::runtime_error("checkpoint header has implausible dimensions");
  }

  ToyPolicy policy(vocab, static_cast<int>(context_width),
                   static_cast<int>(embed_dim));
  auto& params = policy.params();
  if (!in.read(reinterpret_cast<char*>(params.data()),
               static_cast<std::streamsize>(params.size() * sizeof(double)))) {
    std::ostringstream msg;
    msg << "checkpoint truncated: expected " << params.size()
        << " f64 parameters for V=" << vocab_size << " k=" << context_width
        << " d=" << embed_dim;
    throw std::runtime_error(msg.str());
  }
  char extra = 0;
  if (in.read(&extra, 1)) {
    throw std::runtime_error("checkpoint has trailing bytes after parameters");
  }

  if (meta) {
    meta->step = step;
    meta->config_json.clear();
    std::ifstream sidecar(path + ".json");
    if (sidecar) {
      std::ostringstream buf;
      buf << sidecar.rdbuf();
      meta->config_json = buf.str();
    }
  }
  return policy;
}

}  // namespace rlvr
