// Copyright 2026 The Plesio Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

namespace plesio::detail {

// Surface catalog records. Each record starts with "@ <name>" and continues
// with "key: value" lines until the next record:
//   aliases    '|'-separated alternative names
//   table      6 (tool library) or 7 (community collection)
//   formula    expression in the parser grammar
//   range      low high exact|rounded
//   range_alt  second published range, same layout
//   flags      ','-separated markers
//   transform  half-frequency (x -> x/2, period 4 pi) or quarter-pi-shift
inline constexpr const char* kCatalogText = R"catalog(
@ Diamond
table: 6
formula: sin(x)*sin(y)*sin(z) + sin(x)*cos(y)*cos(z) + cos(x)*sin(y)*cos(z) + cos(x)*cos(y)*sin(z)
range: -1.4142135623730951 1.4142135623730951 exact
flags: transcription-corrected

@ Diamond (as printed)
table: 6
formula: sin(x)*sin(y)*sin(z) + sin(x)*sin(y)*cos(z) + cos(x)*sin(y)*cos(z) + cos(x)*cos(y)*sin(z)
flags: as-printed, not-cyclic

@ Double Diamond
table: 6
formula: sin(2*x)*sin(2*y) + sin(2*y)*sin(2*z) + sin(2*z)*sin(2*x) + cos(2*x)*cos(2*y)*cos(2*z)
range: -1 3 exact

@ Double Gyroid
table: 6
formula: 2.75*(sin(2*x)*sin(z)*cos(y) + sin(2*y)*sin(x)*cos(z) + sin(2*z)*sin(y)*cos(x)) - (cos(2*x)*cos(2*y) + cos(2*y)*cos(2*z) + cos(2*z)*cos(2*x))
range: -3 4.125 rounded

@ DP
table: 6
formula: 0.5*(cos(x)*cos(y) + cos(y)*cos(z) + cos(z)*cos(x)) + 0.2*(cos(2*x)*cos(2*y)*cos(2*z))
range: -0.6 2.099 rounded

@ Fischer-Koch, FKS
aliases: FKS|Fischer-Koch|FK-S
table: 6
formula: cos(2*x)*sin(y)*cos(z) + cos(2*y)*sin(z)*cos(x) + cos(2*z)*sin(x)*cos(y)
range: -1.4142135623730951 1.4142135623730951 exact

@ FRP
table: 6
formula: 8*cos(x)*cos(y)*cos(z) + cos(2*x)*cos(2*y)*cos(2*z) - (cos(2*x)*sin(2*y) + cos(2*y)*sin(2*z) + cos(2*z)*sin(2*x))
range: -7.933 9.46 rounded
range_alt: -7.863 9.453 rounded

@ Gyroid
table: 6
formula: sin(x)*cos(y) + sin(y)*cos(z) + sin(z)*cos(x)
range: -1.5 1.5 exact

@ IWP
table: 6
formula: 2*(cos(x)*cos(y) + cos(y)*cos(z) + cos(z)*cos(x)) - (cos(x)*cos(x) + cos(y)*cos(y) + cos(z)*cos(z))
range: -5 3 exact
flags: squared-cosine-reading

@ KP
table: 6
formula: 0.6*(cos(x) + cos(y) + cos(z)) + 0.7*(cos(x)*cos(y) + cos(y)*cos(z) + cos(z)*cos(x)) - 0.9*(cos(2*x)*cos(2*y)*cos(2*z)) + 0.4*(cos(x) + cos(y) + cos(z)) + 0.7*(cos(x)*cos(y) + cos(y)*cos(z) + cos(z)*cos(x)) - 0.9*(cos(2*x)*cos(2*y)*cos(2*z)) + 0.4
range: -3.8 6.6 rounded
flags: duplicated-terms

@ KP-deduplicated
table: 6
formula: 0.6*(cos(x) + cos(y) + cos(z)) + 0.7*(cos(x)*cos(y) + cos(y)*cos(z) + cos(z)*cos(x)) - 0.9*(cos(2*x)*cos(2*y)*cos(2*z)) + 0.4
flags: deduplicated-variant

@ Lidinoïd
aliases: Lidinoid
table: 6
formula: 0.5*(sin(2*x)*cos(y)*sin(z) + sin(2*y)*cos(z)*sin(x) + sin(2*z)*cos(x)*sin(y)) - 0.5*(cos(2*x)*cos(2*y) + cos(2*y)*cos(2*z) + cos(2*z)*cos(2*x)) + 0.15
range: -1.35 1.244 rounded

@ Neovius
table: 6
formula: 3*(cos(x) + cos(y) + cos(z)) + 4*cos(x)*cos(y)*cos(z)
range: -13 13 exact

@ Octo
table: 6
formula: 4*(cos(x)*cos(y) + cos(y)*cos(z) + cos(z)*cos(x)) - 2.8*(cos(x)*cos(y)*cos(z)) + cos(x) + cos(y) + cos(z) + 1.5
range: -6.3 13.7 rounded

@ Schwarz P
table: 6
formula: cos(x) + cos(y) + cos(z)
range: -3 3 exact

@ Split P
aliases: Split-P
table: 6
formula: 1.1*(sin(2*x)*sin(z)*cos(y) + sin(2*y)*sin(x)*cos(z) + sin(2*z)*sin(y)*cos(x)) - 0.2*(cos(2*x)*cos(2*y) + cos(2*y)*cos(2*z) + cos(2*z)*cos(2*x)) - 0.4*(cos(2*x) + cos(2*y) + cos(2*z))
range: -1.8 1.801 rounded

@ Gyroid (corax)
aliases: G|Schoen G|Schoen Gyroid|Y*|Y**
table: 7
formula: cos(x)*sin(y) + cos(y)*sin(z) + cos(z)*sin(x)

@ D Surface
aliases: Schwarz D|Diamond D|D*|Black D
table: 7
formula: sin(x)*sin(y)*sin(z) + sin(x)*cos(y)*cos(z) + cos(x)*sin(y)*cos(z) + cos(x)*cos(y)*sin(z)
transform: half-frequency

@ Diamond (corax)
table: 7
formula: cos(x)*cos(y)*cos(z) - sin(x)*sin(y)*sin(z)
transform: half-frequency

@ P Surface
aliases: Primitive|Schwarz P|Simple Cubic|P*
table: 7
formula: cos(x) + cos(y) + cos(z)

@ C(D) Surface
aliases: C(D*)|Complementary D
table: 7
formula: cos(3*x + y)*cos(z) - sin(3*x - y)*sin(z) + cos(x + 3*y)*cos(z) + sin(x - 3*y)*sin(z) + cos(x - y)*cos(3*z) - sin(x + y)*sin(3*z)
transform: half-frequency

@ IWP (corax)
aliases: I-WP|Surface BCC|IP2-J*|Schoen I-graph-wrapped package
table: 7
formula: 2*(cos(x)*cos(y) + cos(y)*cos(z) + cos(z)*cos(x)) - (cos(2*x) + cos(2*y) + cos(2*z))

@ Fisher-Koch
table: 7
formula: (cos(x)*cos(y) + cos(y)*cos(z) + cos(z)*cos(x)) - (cos(2*x) + cos(2*y) + cos(2*z))

@ Lidinoïd (corax)
aliases: HG|L|Lidinoid (corax)
table: 7
formula: sin(2*x)*sin(z)*cos(y) + sin(2*y)*sin(x)*cos(z) + sin(2*z)*sin(y)*cos(x) - (cos(2*x)*cos(2*y) + cos(2*y)*cos(2*z) + cos(2*z)*cos(2*x)) + 0.3
transform: half-frequency

@ OCTO (corax)
aliases: O,C-TO|O,CT-O
table: 7
formula: 0.6*(cos(x)*cos(y) + cos(y)*cos(z) + cos(z)*cos(x)) - 0.4*(cos(x) + cos(y) + cos(z)) + 0.25

@ FRD
aliases: F-RD|F_xx-P2Fz|Schoen FRD
table: 7
formula: 8*cos(x)*cos(y)*cos(z) + cos(2*x)*cos(2*y)*cos(2*z) - (cos(2*x)*cos(2*y) + cos(2*x)*cos(2*z) + cos(2*y)*cos(2*z))

@ FRD Prime
aliases: S6-Surface
table: 7
formula: 4*cos(x)*cos(y)*cos(z) - (cos(2*x)*cos(2*y) + cos(2*x)*cos(2*z) + cos(2*y)*cos(2*z))

@ S Surface
aliases: Fischer Koch S|S*
table: 7
formula: cos(2*x)*sin(y)*cos(z) + cos(2*y)*sin(z)*cos(x) + cos(2*z)*sin(x)*cos(y)

@ C(S) Surface
aliases: Complementary S|Fisher-Koch C(S)
table: 7
formula: cos(2*x) + cos(2*y) + cos(2*z) + 2*(sin(3*x)*sin(2*y)*cos(z) + cos(x)*sin(3*y)*sin(2*z) + sin(2*x)*cos(y)*sin(3*z)) + 2*(sin(2*x)*cos(3*y)*sin(z) + sin(x)*sin(2*y)*cos(3*z) + cos(3*x)*sin(y)*sin(2*z))

@ PN Surface
aliases: P+C(P)
table: 7
formula: 0.3*cos(x)*cos(y)*cos(z) + 0.2*(cos(x) + cos(y) + cos(z)) + 0.1*cos(2*x)*cos(2*y)*cos(2*z) + 0.1*(cos(2*x) + cos(2*y) + cos(2*z)) + 0.05*cos(3*x)*cos(3*y)*cos(3*z) + 0.1*(cos(x)*cos(y) + cos(y)*cos(z) + cos(z)*cos(x))

@ G Prime 1
aliases: G'|G Prime 2 [Chr2024]
table: 7
formula: sin(2*x)*sin(z)*cos(y) + sin(2*y)*sin(x)*cos(z) + sin(2*z)*sin(y)*cos(x) + cos(2*x)*cos(2*y) + cos(2*y)*cos(2*z) + cos(2*z)*cos(2*x) + 0.32

@ G Prime 2
aliases: G'|G Prime 1 [Chr2024]
table: 7
formula: 5*(sin(2*x)*sin(z)*cos(y) + sin(2*y)*sin(x)*cos(z) + sin(2*z)*sin(y)*cos(x)) + cos(2*x)*cos(2*y) + cos(2*y)*cos(2*z) + cos(2*z)*cos(2*x)

@ D Prime
aliases: D'
table: 7
flags: not-cyclic
formula: 0.5*(cos(x)*cos(y)*cos(z) + cos(x)*sin(y)*sin(z) + sin(x)*cos(y)*sin(z) + sin(x)*sin(y)*sin(z)) - 0.5*(sin(2*x)*sin(2*y) + sin(2*y)*sin(2*z) + sin(2*z)*sin(2*x)) - 0.2

@ K Surface
aliases: Karcher K|KP
table: 7
formula: 0.3*(cos(x) + cos(y) + cos(z)) + 0.3*(cos(x)*cos(y) + cos(y)*cos(z) + cos(z)*cos(x)) - 0.4*(cos(2*x) + cos(2*y) + cos(2*z)) + 0.2

@ Y Surface
aliases: Fisher-Koch Y
table: 7
formula: cos(x)*cos(y)*cos(z) + sin(x)*sin(y)*sin(z) + sin(2*x)*sin(y) + sin(2*y)*sin(z) + sin(2*z)*sin(x) + cos(x)*sin(2*y) + cos(y)*sin(2*z) + cos(z)*sin(2*x)

@ C(Y) Surface
aliases: Fisher-Koch C(Y)|Complementary Y|(YY_xxx)*
table: 7
formula: cos(x)*cos(y)*cos(z) - sin(x)*sin(y)*sin(z) + sin(2*x)*sin(y) + sin(2*y)*sin(z) + sin(x)*sin(2*z) - sin(2*x)*cos(z) + sin(2*y)*cos(x) + sin(2*z)*cos(y)
flags: not-cyclic

@ PMY
aliases: +/-Y|(F_xxx)*
table: 7
formula: 2*cos(x)*cos(y)*cos(z) + sin(2*x)*sin(y) + sin(2*y)*sin(z) + sin(2*z)*sin(x)

@ CPMY
aliases: Complementary +/-Y|(FF_xxx)*
table: 7
formula: -2*cos(x)*cos(y)*cos(z) + sin(2*x)*sin(y) + sin(2*y)*sin(z) + sin(2*z)*sin(x)

@ C(I2-Y**)
aliases: Complementary I2-Y**|S*-Y_xxx**
table: 7
formula: 2*(sin(2*x)*cos(y)*sin(z) + sin(x)*sin(2*y)*cos(z) + cos(x)*sin(y)*sin(2*z)) + cos(2*x)*cos(2*y) + cos(2*y)*cos(2*z) + cos(2*x)*cos(2*z)

@ Q* Surface
table: 7
formula: (cos(x) - 2*cos(y))*cos(z) - 1.7320508075688772*sin(z)*(cos(x - y) - cos(x)) + cos(x - y)*cos(z)
flags: not-cyclic

@ C(G) Surface
aliases: Complementary G|C(Y**)|Complementary Y**
table: 7
formula: 3*(sin(x)*cos(y) + sin(y)*cos(z) + sin(z)*cos(x)) + 2*(sin(3*x)*cos(y) + sin(3*y)*cos(z) + sin(3*z)*cos(x)) - 2*(sin(x)*cos(3*y) + sin(y)*cos(3*z) + sin(z)*cos(3*x))

@ Bionic Bone 1
table: 7
formula: 20*(cos(x)*sin(y) + cos(y)*sin(z) + cos(z)*sin(x)) - 0.5*(cos(2*x)*cos(2*y) + cos(2*y)*cos(2*z) + cos(2*z)*cos(2*x)) - 4

@ Bionic Bone 2
table: 7
formula: 10*(cos(x)*sin(y) + cos(y)*sin(z) + cos(z)*sin(x)) - 2*(cos(2*x)*cos(2*y) + cos(2*y)*cos(2*z) + cos(2*z)*cos(2*x)) - 12

@ Neovius Slotted-P
aliases: Slotted-P|C9(P)|C(P)|Complementary P|P*|J* WzI-W_xx
table: 7
formula: 3*(cos(x) + cos(y) + cos(z)) + 4*cos(x)*cos(y)*cos(z) - 2*(cos(x)*cos(y) + cos(y)*cos(z) + cos(z)*cos(x)) - 2*(cos(2*x) + cos(2*y) + cos(2*z)) + (cos(2*x)*cos(y) + cos(2*y)*cos(z) + cos(2*z)*cos(x)) - (cos(x)*cos(2*y) + cos(y)*cos(2*z) + cos(z)*cos(2*x))

@ S3 Surface
table: 7
formula: cos(x)*cos(y) + cos(x)*cos(z) + cos(y)*cos(z) + sin(x)*cos(y) + sin(x)*cos(z) + sin(y)*cos(z) + sin(y)*cos(x) + sin(z)*cos(y)
flags: not-cyclic

@ S4 Surface
table: 7
formula: cos(2*x)*cos(y)*cos(z) + cos(2*y)*cos(x)*cos(z) + cos(2*z)*cos(x)*cos(y) + sin(x)*cos(y) + sin(x)*cos(z) + sin(y)*cos(z) + sin(y)*cos(x) + sin(z)*cos(x) + sin(z)*cos(y)

@ S7 Surface
table: 7
formula: 4*sin(x)*cos(y)*cos(z) - (cos(x)*cos(y) + cos(y)*cos(z) + cos(z)*cos(x))
flags: not-cyclic

@ S8 Surface
table: 7
formula: 8*(cos(x)*cos(z)*sin(x) + cos(y)*cos(z)*sin(y) + cos(x)*cos(y)*sin(z))
flags: not-cyclic

@ S9 Surface
table: 7
formula: 3*sin(x)*sin(y) - 4*cos(x)*cos(y)*cos(z)
flags: likely-bug, not-cyclic

@ S9 Surface-corrected
table: 7
formula: 3*(sin(x)*sin(y) + sin(y)*sin(z) + sin(z)*sin(x)) - 4*cos(x)*cos(y)*cos(z)
flags: corrected-variant

@ Double Gyroid (corax)
table: 7
formula: 2.75*(sin(2*x)*cos(y)*sin(z) + sin(2*y)*cos(z)*sin(x) + sin(2*z)*cos(x)*sin(y)) - (cos(2*x)*cos(2*y) + cos(2*y)*cos(2*z) + cos(2*z)*cos(2*x))
flags: possible-bracket-bug

@ Double Gyroid (corax)-corrected
table: 7
formula: 2.75*(sin(2*x)*cos(y)*sin(z) + sin(2*y)*cos(z)*sin(x) + sin(2*z)*cos(x)*sin(y) - (cos(2*x)*cos(2*y) + cos(2*y)*cos(2*z) + cos(2*z)*cos(2*x)))
flags: corrected-variant

@ I2-Y**
table: 7
formula: -2*(sin(2*x)*cos(y)*sin(z) + sin(x)*sin(2*y)*cos(z) + cos(x)*sin(y)*sin(2*z)) + cos(2*x)*cos(2*y) + cos(2*y)*cos(2*z) + cos(2*x)*cos(2*z)

@ Double D
aliases: Double Diamond|Double Diamond 1
table: 7
formula: sin(x)*sin(y) + sin(y)*sin(z) + sin(z)*sin(x) + cos(x)*cos(y)*cos(z)

@ Double D 2
aliases: Double Diamond 2
table: 7
formula: cos(x)*cos(y) + cos(y)*cos(z) + cos(z)*cos(x) + sin(x)*sin(y)*sin(z)

@ Double P
aliases: DP-Surface|Double Primitive
table: 7
formula: 0.5*(cos(x)*cos(y) + cos(y)*cos(z) + cos(z)*cos(x)) + 0.2*(cos(2*x) + cos(2*y) + cos(2*z))

@ Split P (corax)
aliases: P2-DG
table: 7
formula: 1.1*(sin(2*x)*sin(z)*cos(y) + sin(2*y)*sin(x)*cos(z) + sin(2*z)*sin(y)*cos(x)) - 0.2*(cos(2*x)*cos(2*y) + cos(2*y)*cos(2*z) + cos(2*z)*cos(2*x)) - 0.4*(cos(x) + cos(y) + cos(z))

@ Tubular Gyroid
table: 7
formula: 10*(cos(x)*sin(y) + cos(y)*sin(z) + cos(z)*sin(x)) - 0.5*(cos(2*x)*cos(2*y) + cos(2*y)*cos(2*z) + cos(2*z)*cos(2*x)) - 14

@ Tubular D
table: 7
formula: 10*(sin(x)*sin(y)*sin(z) + sin(x)*cos(y)*cos(z) + cos(x)*sin(y)*cos(z) + cos(x)*cos(y)*sin(z)) - 0.7*(cos(4*x) + cos(4*y) + cos(4*z)) - 11
transform: quarter-pi-shift

@ Tubular P
table: 7
formula: 10*(cos(x) + cos(y) + cos(z)) - 5.1*(cos(x)*cos(y) + cos(y)*cos(z) + cos(z)*cos(x)) - 14.6

@ F Surface
aliases: F*|triplepanel
table: 7
formula: cos(x)*cos(y)*cos(z)

@ W Surface
aliases: W*
table: 7
formula: (cos(2*x)*cos(y) + cos(2*y)*cos(z) + cos(2*z)*cos(x)) - (cos(x)*cos(2*y) + cos(y)*cos(2*z) + cos(z)*cos(2*x))
)catalog";

}  // namespace plesio::detail
