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

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

using namespace doma;

namespace {

PartialKey make_pk(std::uint64_t device_index, std::uint64_t nonce) {
  PartialKey pk;
  pk.device_index = device_index;
  std::vector<std::uint8_t> seed;
  for (int shift = 56; shift >= 0; shift -= 8) {
    seed.push_back(static_cast<std::uint8_t>(nonce >> shift));
  }
  pk.key_bytes = sha256(seed);
  return pk;
}

nlohmann::json load_fixtures() {
  const std::string path = std::string(DOMA_FIXTURES_DIR) + "/cluster_key_vectors.json";
  std::ifstream in(path);
  REQUIRE(in.good());
  nlohmann::json j;
  in >> j;
  return j;
}

std::array<std::uint8_t, 32> to_key_bytes(const std::string& hex) {
  const std::vector<std::uint8_t> bytes = hex_decode(hex);
  REQUIRE(bytes.size() == 32);
  std::array<std::uint8_t, 32> out;
  std::copy(bytes.begin(), bytes.end(), out.begin());
  return out;
}

// Five devices where device 1 has the best unified quality and device 5 the
// worst, mirroring the downlink fixture.
SicOrder descending_quality_order() {
  return SicOrder({5, 4, 3, 2, 1}, {50.0, 40.0, 30.0, 20.0, 10.0});
}

}  // namespace

TEST_CASE("cluster keys match the frozen cross-implementation vectors") {
  const nlohmann::json fixtures = load_fixtures();
  for (const auto& vec : fixtures.at("cluster_key_vectors")) {
    std::vector<PartialKey> pks;
    const auto& indices = vec.at("device_indices");
    const auto& hexes = vec.at("partial_keys_hex");
    for (std::size_t i = 0; i < indices.size(); ++i) {
      pks.push_back(PartialKey{indices[i].get<std::uint64_t>(),
                               to_key_bytes(hexes[i].get<std::string>())});
    }
    const ClusterKey ck = derive_cluster_key(pks);
    CHECK(hex_encode(ck.key_bytes) == vec.at("expected_cluster_key_hex").get<std::string>());
  }
}

TEST_CASE("downlink key matches the frozen vector and its chain indices") {
  const nlohmann::json fixtures = load_fixtures();
  for (const auto& vec : fixtures.at("downlink_vectors")) {
    const std::vector<double> metric = vec.at("metric_values").get<std::vector<double>>();
    std::vector<std::size_t> ranks(metric.size());
    for (std::size_t i = 0; i < metric.size(); ++i) {
      ranks[i] = metric.size() - i;  // descending metric by index
    }
    const SicOrder order(ranks, metric);
    std::vector<PartialKey> pks;
    for (std::size_t i = 0; i < metric.size(); ++i) {
      pks.push_back(PartialKey{i + 1, to_key_bytes(vec.at("partial_keys_hex")[i])});
    }
    const std::uint64_t target = vec.at("target_device_index").get<std::uint64_t>();
    CHECK(downlink_key_indices(order, target) ==
          vec.at("expected_chain_device_indices").get<std::vector<std::uint64_t>>());
    const ClusterKey key = derive_downlink_key(pks, order, target);
    CHECK(hex_encode(key.key_bytes) == vec.at("expected_key_hex").get<std::string>());
  }
}

TEST_CASE("derivation is deterministic and order-sensitive") {
  std::vector<PartialKey> pks{make_pk(1, 100), make_pk(2, 200), make_pk(3, 300)};
  const ClusterKey a = derive_cluster_key(pks);
  const ClusterKey b = derive_cluster_key(pks);
  CHECK(a.key_bytes == b.key_bytes);
  CHECK(a.order_fingerprint == b.order_fingerprint);

  std::swap(pks[0], pks[2]);
  const ClusterKey swapped = derive_cluster_key(pks);
  CHECK(swapped.key_bytes != a.key_bytes);
  CHECK(swapped.order_fingerprint != a.order_fingerprint);
}

TEST_CASE("1000 random permutations of 7 keys produce 1000 distinct cluster keys") {
  std::vector<PartialKey> pks;
  for (std::uint64_t i = 1; i <= 7; ++i) {
    pks.push_back(make_pk(i, i * 1000));
  }
  std::mt19937_64 rng(77);
  std::set<std::vector<std::uint64_t>> seen_orders;
  std::set<std::string> derived;
  while (seen_orders.size() < 1000) {
    std::shuffle(pks.begin(), pks.end(), rng);
    std::vector<std::uint64_t> order;
    for (const PartialKey& pk : pks) order.push_back(pk.device_index);
    if (!seen_orders.insert(order).second) continue;
    derived.insert(hex_encode(derive_cluster_key(pks).key_bytes));
  }
  CHECK(derived.size() == 1000);
}

TEST_CASE("derive_cluster_key rejects empty and duplicated input") {
  CHECK_THROWS_AS(derive_cluster_key({}), std::invalid_argument);
  std::vector<PartialKey> pks{make_pk(4, 1), make_pk(4, 2)};
  CHECK_THROWS_AS(derive_cluster_key(pks), std::invalid_argument);
}

TEST_CASE("single-key cluster equals the chain of one partial key") {
  const std::vector<PartialKey> one{make_pk(1, 42)};
  const ClusterKey direct = derive_cluster_key(one);

  const SicOrder order({1}, {1.0});
  const ClusterKey downlink = derive_downlink_key(one, order, 1);
  CHECK(direct.key_bytes == downlink.key_bytes);
}

TEST_CASE("downlink chain for the second-best of five covers devices 2..5") {
  const SicOrder order = descending_quality_order();
  CHECK(downlink_key_indices(order, 2) == std::vector<std::uint64_t>{2, 3, 4, 5});
  CHECK(downlink_key_indices(order, 5) == std::vector<std::uint64_t>{5});
  CHECK(downlink_key_indices(order, 1) == std::vector<std::uint64_t>{1, 2, 3, 4, 5});
}

TEST_CASE("better quality strictly widens the downlink key set") {
  const SicOrder order = descending_quality_order();
  // device 5 is worst, device 1 best; walk upward in quality
  std::vector<std::uint64_t> previous;
  for (std::uint64_t device = 5; device >= 1; --device) {
    std::vector<std::uint64_t> indices = downlink_key_indices(order, device);
    std::set<std::uint64_t> current(indices.begin(), indices.end());
    if (!previous.empty()) {
      CHECK(current.size() == previous.size() + 1);
      CHECK(std::includes(current.begin(), current.end(), previous.begin(), previous.end()));
    }
    previous.assign(current.begin(), current.end());
  }
}

TEST_CASE("downlink derivation equals an explicit chain over the selected keys") {
  const SicOrder order = descending_quality_order();
  std::vector<PartialKey> pks;
  for (std::uint64_t i = 1; i <= 5; ++i) pks.push_back(make_pk(i, i));
  const ClusterKey key = derive_downlink_key(pks, order, 2);
  const std::vector<PartialKey> chain{pks[1], pks[2], pks[3], pks[4]};
  CHECK(key.key_bytes == derive_cluster_key(chain).key_bytes);
}

TEST_CASE("downlink derivation validates its inputs") {
  const SicOrder order = descending_quality_order();
  std::vector<PartialKey> pks;
  for (std::uint64_t i = 1; i <= 5; ++i) pks.push_back(make_pk(i, i));
  CHECK_THROWS_AS(derive_downlink_key(pks, order, 6), std::invalid_argument);
  CHECK_THROWS_AS(derive_downlink_key(pks, order, 0), std::invalid_argument);
  pks.pop_back();
  CHECK_THROWS_AS(derive_downlink_key(pks, order, 2), std::invalid_argument);
  pks.push_back(make_pk(9, 9));
  CHECK_THROWS_AS(derive_downlink_key(pks, order, 2), std::invalid_argument);
}

TEST_CASE("seal/open round-trips payloads of length 0, 1, and 1e6") {
  const ClusterKey key = derive_cluster_key(std::vector<PartialKey>{make_pk(1, 5)});
  for (std::size_t size : {std::size_t{0}, std::size_t{1}, std::size_t{1000000}}) {
    std::vector<std::uint8_t> payload(size);
    for (std::size_t i = 0; i < size; ++i) payload[i] = static_cast<std::uint8_t>(i * 31 + 7);
    const std::vector<std::uint8_t> sealed = seal(payload, key);
    const auto opened = doma::open(sealed, key);
    REQUIRE(opened.has_value());
    CHECK(*opened == payload);
  }
}

TEST_CASE("open fails cleanly under a wrong-order key, wrong key, or tampering") {
  std::vector<PartialKey> pks{make_pk(1, 1), make_pk(2, 2), make_pk(3, 3)};
  const ClusterKey right = derive_cluster_key(pks);
  std::swap(pks[0], pks[1]);
  const ClusterKey wrong_order = derive_cluster_key(pks);

  const std::vector<std::uint8_t> payload{'p', 'a', 'y', 'l', 'o', 'a', 'd'};
  const std::vector<std::uint8_t> sealed = seal(payload, right);

  CHECK(!doma::open(sealed, wrong_order).has_value());

  ClusterKey flipped = right;
  flipped.key_bytes[0] ^= 1;
  CHECK(!doma::open(sealed, flipped).has_value());

  std::vector<std::uint8_t> tampered = sealed;
  tampered.back() ^= 0x80;
  CHECK(!doma::open(tampered, right).has_value());

  CHECK(!doma::open(std::vector<std::uint8_t>{1, 2, 3}, right).has_value());
}

TEST_CASE("sealing twice yields distinct ciphertexts that both open") {
  const ClusterKey key = derive_cluster_key(std::vector<PartialKey>{make_pk(1, 8)});
  const std::vector<std::uint8_t> payload{9, 9, 9};
  const auto a = seal(payload, key);
  const auto b = seal(payload, key);
  CHECK(a != b);  // fresh nonce each time
  CHECK(doma::open(a, key) == payload);
  CHECK(doma::open(b, key) == payload);
}

TEST_CASE("hex helpers round-trip and reject bad input") {
  const std::vector<std::uint8_t> bytes{0x00, 0x7f, 0xff, 0x10};
  CHECK(hex_encode(bytes) == "007fff10");
  CHECK(hex_decode("007fff10") == bytes);
  CHECK(hex_decode("ABCDEF") == hex_decode("abcdef"));
  CHECK_THROWS_AS(hex_decode("abc"), std::invalid_argument);
  CHECK_THROWS_AS(hex_decode("zz"), std::invalid_argument);
}

TEST_CASE("sha256 matches a known digest") {
  // SHA-256("abc")
  const std::vector<std::uint8_t> abc{'a', 'b', 'c'};
  CHECK(hex_encode(sha256(abc)) ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
