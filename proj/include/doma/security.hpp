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

#ifndef DOMA_SECURITY_HPP
#define DOMA_SECURITY_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "doma/scenario.hpp"

namespace doma {

/// One device's share of the cluster key. device_index is the 1-based device
/// position within the cluster.
struct PartialKey {
  std::uint64_t device_index;
  std::array<std::uint8_t, 32> key_bytes;
};

/// Assembled key plus a digest of the decode order it was chained in.
struct ClusterKey {
  std::array<std::uint8_t, 32> key_bytes;
  std::array<std::uint8_t, 32> order_fingerprint;
};

/// Order-sensitive chained derivation: state_0 is a fixed 32-byte domain
/// constant, state_i = SHA-256(state_{i-1} || PK_i), and the cluster key is
/// the final state. Reordering any two partial keys changes the result.
/// The input list must be nonempty with distinct device indices.
ClusterKey derive_cluster_key(std::span<const PartialKey> partial_keys_in_decode_order);

/// Device indices whose partial keys protect the downlink of `target`:
/// the target itself followed by every device of strictly lower unified
/// quality, in descending-quality order. The weakest device chains only its
/// own key.
std::vector<std::uint64_t> downlink_key_indices(const SicOrder& quality_ranks,
                                                std::uint64_t target_device_index);

/// Chains the partial keys selected by downlink_key_indices. `partial_keys`
/// must hold one key per cluster device with indices 1..M.
ClusterKey derive_downlink_key(std::span<const PartialKey> partial_keys,
                               const SicOrder& quality_ranks, std::uint64_t target_device_index);

/// Authenticated symmetric encryption under a cluster key. seal prepends a
/// fresh random nonce; open returns the payload only when both the key and
/// the ciphertext are exactly right, never garbage.
std::vector<std::uint8_t> seal(std::span<const std::uint8_t> payload, const ClusterKey& key);
std::optional<std::vector<std::uint8_t>> open(std::span<const std::uint8_t> sealed,
                                              const ClusterKey& key);

std::array<std::uint8_t, 32> sha256(std::span<const std::uint8_t> data);
std::string hex_encode(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> hex_decode(std::string_view hex);

}  // namespace doma

#endif  // DOMA_SECURITY_HPP
