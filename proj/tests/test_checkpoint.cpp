#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "digitpow/checkpoint.hpp"

using namespace digitpow;
namespace fs = std::filesystem;

namespace {

PowerState advanced(std::uint32_t a, std::uint64_t n) {
  PowerState s(a);
  while (s.n() < n) s.step();
  return s;
}

fs::path scratch_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("digitpow-test-" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST(PowerState, Multipliers) {
  EXPECT_NO_THROW(PowerState(2));
  EXPECT_NO_THROW(PowerState(99));
  EXPECT_THROW(PowerState(10), std::invalid_argument);
  EXPECT_THROW(PowerState(1), std::invalid_argument);
  EXPECT_THROW(PowerState(100), std::invalid_argument);
  EXPECT_TRUE(is_power_of_ten(1));
  EXPECT_TRUE(is_power_of_ten(1000));
  EXPECT_FALSE(is_power_of_ten(20));
  EXPECT_FALSE(is_power_of_ten(0));
}

TEST(PowerState, StepAndStepBack) {
  auto s = advanced(3, 40);
  EXPECT_EQ(s.value().to_decimal_string(), "12157665459056928801");
  s.step_back();
  EXPECT_EQ(s.n(), 39u);
  EXPECT_EQ(s.value().to_decimal_string(), "4052555153018976267");
  EXPECT_THROW(PowerState().step_back(), std::logic_error);
}

TEST(Checkpoint, EncodeLayout) {
  const std::string text = encode_checkpoint(advanced(2, 10));
  const std::string payload = "DIGITPOW-CKPT v1\nmultiplier=2\nn=10\n1024\n";
  EXPECT_EQ(text, "DIGITPOW-CKPT v1\nmultiplier=2\nn=10\ndigest=" + sha256_hex(payload) + "\n1024\n");
}

TEST(Checkpoint, Sha256KnownVector) {
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Checkpoint, RoundTrip) {
  for (std::uint32_t a : {2u, 3u, 7u, 99u}) {
    const auto s = advanced(a, 321);
    const auto back = decode_checkpoint(encode_checkpoint(s));
    EXPECT_EQ(back.multiplier(), a);
    EXPECT_EQ(back.n(), 321u);
    EXPECT_EQ(back.value(), s.value());
  }
}

TEST(Checkpoint, RejectsTampering) {
  const std::string good = encode_checkpoint(advanced(2, 64));
  auto tampered = good;
  tampered[tampered.size() - 3] = tampered[tampered.size() - 3] == '1' ? '2' : '1';
  EXPECT_THROW(decode_checkpoint(tampered), CheckpointError);

  auto wrong_n = good;
  wrong_n.replace(wrong_n.find("n=64"), 4, "n=65");
  EXPECT_THROW(decode_checkpoint(wrong_n), CheckpointError);

  EXPECT_THROW(decode_checkpoint("DIGITPOW-CKPT v2\nmultiplier=2\nn=0\ndigest=00\n1\n"), CheckpointError);
  EXPECT_THROW(decode_checkpoint("DIGITPOW-CKPT v1\nmultiplier=2\n"), CheckpointError);
  EXPECT_THROW(decode_checkpoint(good + "extra\n"), CheckpointError);
}

TEST(Checkpoint, RejectsPowerOfTenMultiplierEvenWithValidDigest) {
  const std::string payload = "DIGITPOW-CKPT v1\nmultiplier=10\nn=1\n10\n";
  const std::string text = "DIGITPOW-CKPT v1\nmultiplier=10\nn=1\ndigest=" + sha256_hex(payload) + "\n10\n";
  EXPECT_THROW(decode_checkpoint(text), CheckpointError);
}

TEST(Checkpoint, AtomicFileWrite) {
  const auto dir = scratch_dir("ckpt");
  const auto s = advanced(2, 500);
  const auto path = checkpoint_path(dir, s);
  EXPECT_EQ(path.filename(), "checkpoint-a2-n500.ckpt");
  write_checkpoint(path, s);
  EXPECT_TRUE(fs::exists(path));
  EXPECT_FALSE(fs::exists(path.string() + ".tmp"));
  const auto back = read_checkpoint(path);
  EXPECT_EQ(back.value(), s.value());

  // Overwrite in place.
  write_checkpoint(path, advanced(2, 501));
  EXPECT_EQ(read_checkpoint(path).n(), 501u);
  EXPECT_THROW(read_checkpoint(dir / "missing.ckpt"), CheckpointError);
  fs::remove_all(dir);
}
