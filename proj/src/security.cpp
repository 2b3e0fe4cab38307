// Copyright 2026 The D-OMA Simulator Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "doma/security.hpp"

#include <sodium.h>

#include <algorithm>
#include <cstring>
#include <mutex>
#include <set>
#include <stdexcept>

namespace doma {

namespace {

// Chain start state. Exactly 32 bytes; changing it is a key-format break.
constexpr char kChainDomain[] = "DOMA-CLUSTER-KEY-DERIVATION-V1.0";
static_assert(sizeof(kChainDomain) - 1 == 32);

constexpr char kFingerprintDomain[] = "DOMA-SIC-ORDER-FINGERPRINT-V1.0";

static_assert(crypto_secretbox_KEYBYTES == 32);

void ensure_sodium() {
  static std::once_flag flag;
  std::call_once(flag, [] {
    if (sodium_init() < 0) {
      throw std::runtime_error("libsodium initialization failed");
    }
  });
}

void append_u64_be(std::vector<std::uint8_t>& out, std::uint64_t value) {
  for (int shift = 56; shift >= 0; shift -= 8) {
    out.push_back(static_cast<std::uint8_t>(value >> shift));
  }
}

std::array<std::uint8_t, 32> chain_keys(std::span<const PartialKey> keys) {
  std::array<std::uint8_t, 32> state;
  std::memcpy(state.data(), kChainDomain, 32);
  std::uint8_t block[64];
  for (const PartialKey& pk : keys) {
    std::memcpy(block, state.data(), 32);
    std::memcpy(block + 32, pk.key_bytes.data(), 32);
    crypto_hash_sha256(state.data(), block, sizeof(block));
  }
  return state;
}

std::array<std::uint8_t, 32> order_fingerprint(std::span<const PartialKey> keys) {
  std::vector<std::uint8_t> buf(kFingerprintDomain,
                                kFingerprintDomain + sizeof(kFingerprintDomain) - 1);
  for (const PartialKey& pk : keys) {
    append_u64_be(buf, pk.device_index);
  }
  return sha256(buf);
}

void check_distinct_indices(std::span<const PartialKey> keys) {
  std::set<std::uint64_t> seen;
  for (const PartialKey& pk : keys) {
    if (!seen.insert(pk.device_index).second) {
      throw std::invalid_argument("duplicate device index " + std::to_string(pk.device_index) +
                                  " in partial key list");
    }
  }
}

}  // namespace

std::array<std::uint8_t, 32> sha256(std::span<const std::uint8_t> data) {
  ensure_sodium();
  std::array<std::uint8_t, 32> digest;
  static const std::uint8_t kEmpty = 0;
  crypto_hash_sha256(digest.data(), data.empty() ? &kEmpty : data.data(), data.size());
  return digest;
}

ClusterKey derive_cluster_key(std::span<const PartialKey> partial_keys_in_decode_order) {
  ensure_sodium();
  if (partial_keys_in_decode_order.empty()) {
    throw std::invalid_argument("derive_cluster_key: partial key list is empty");
  }
  check_distinct_indices(partial_keys_in_decode_order);
  return ClusterKey{chain_keys(partial_keys_in_decode_order),
                    order_fingerprint(partial_keys_in_decode_order)};
}

std::vector<std::uint64_t> downlink_key_indices(const SicOrder& quality_ranks,
                                                std::uint64_t target_device_index) {
  const std::size_t m = quality_ranks.device_count();
  if (target_device_index < 1 || target_device_index > m) {
    throw std::invalid_argument("unknown target device index " +
                                std::to_string(target_device_index));
  }
  const std::size_t target_rank = quality_ranks.rank_of(target_device_index - 1);
  std::vector<std::uint64_t> indices;
  indices.reserve(target_rank);
  indices.push_back(target_device_index);
  for (std::size_t rank = target_rank; rank-- > 1;) {
    indices.push_back(static_cast<std::uint64_t>(quality_ranks.device_with_rank(rank)) + 1);
  }
  return indices;
}

ClusterKey derive_downlink_key(std::span<const PartialKey> partial_keys,
                               const SicOrder& quality_ranks,
                               std::uint64_t target_device_index) {
  ensure_sodium();
  const std::size_t m = quality_ranks.device_count();
  if (partial_keys.size() != m) {
    throw std::invalid_argument("derive_downlink_key: need one partial key per cluster device");
  }
  check_distinct_indices(partial_keys);
  std::vector<const PartialKey*> by_index(m, nullptr);
  for (const PartialKey& pk : partial_keys) {
    if (pk.device_index < 1 || pk.device_index > m) {
      throw std::invalid_argument("partial key device index " + std::to_string(pk.device_index) +
                                  " outside cluster 1.." + std::to_string(m));
    }
    by_index[pk.device_index - 1] = &pk;
  }
  std::vector<PartialKey> chain;
  for (std::uint64_t index : downlink_key_indices(quality_ranks, target_device_index)) {
    chain.push_back(*by_index[index - 1]);
  }
  return ClusterKey{chain_keys(chain), order_fingerprint(chain)};
}

std::vector<std::uint8_t> seal(std::span<const std::uint8_t> payload, const ClusterKey& key) {
  ensure_sodium();
  std::vector<std::uint8_t> out(crypto_secretbox_NONCEBYTES + crypto_secretbox_MACBYTES +
                                payload.size());
  randombytes_buf(out.data(), crypto_secretbox_NONCEBYTES);
  static const std::uint8_t kEmpty = 0;
  crypto_secretbox_easy(out.data() + crypto_secretbox_NONCEBYTES,
                        payload.empty() ? &kEmpty : payload.data(), payload.size(), out.data(),
                        key.key_bytes.data());
  return out;
}

std::optional<std::vector<std::uint8_t>> open(std::span<const std::uint8_t> sealed,
                                              const ClusterKey& key) {
  ensure_sodium();
  if (sealed.size() < crypto_secretbox_NONCEBYTES + crypto_secretbox_MACBYTES) {
    return std::nullopt;
  }
  const std::size_t payload_size =
      sealed.size() - crypto_secretbox_NONCEBYTES - crypto_secretbox_MACBYTES;
  std::vector<std::uint8_t> payload(payload_size);
  static std::uint8_t sink = 0;
  const int rc = crypto_secretbox_open_easy(
      payload.empty() ? &sink : payload.data(), sealed.data() + crypto_secretbox_NONCEBYTES,
      sealed.size() - crypto_secretbox_NONCEBYTES, sealed.data(), key.key_bytes.data());
  if (rc != 0) {
    return std::nullopt;
  }
  return payload;
}

std::string hex_encode(std::span<const std::uint8_t> bytes) {
  static const char* kDigits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0x0f]);
  }
  return out;
}

std::vector<std::uint8_t> hex_decode(std::string_view hex) {
  if (hex.size() % 2 != 0) {
    throw std::invalid_argument("hex string must have even length");
  }
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw std::invalid_argument("invalid hex digit");
  };
  std::vector<std::uint8_t> out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<std::uint8_t>((nibble(hex[2 * i]) << 4) | nibble(hex[2 * i + 1]));
  }
  return out;
}

}  // namespace doma
