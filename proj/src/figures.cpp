#include "trisurf/catalog.hpp"

// Figures transcribed point by point and segment by segment from the
// published drawings. Handle-type entries live on the 30x30 square with grid
// spacing 10; crosscap entries are two hexagons sharing the side x=0.

namespace trisurf {

const std::vector<Figure>& figures() {
  static const std::vector<Figure> all = {
  // Kh1
  {"Kh1",
   {{0, 0}, {10, 0}, {20, 0}, {30, 0}, {0, 10}, {15, 10}, {30, 10}, {0, 20}, {10, 20}, {20, 20}, {30, 20}, {0, 30}, {10, 30}, {20, 30}, {30, 30}},
   {{{0, 0}, {30, 0}}, {{0, 10}, {30, 10}}, {{0, 20}, {30, 20}}, {{0, 30}, {30, 30}}, {{0, 0}, {0, 30}},
    {{30, 0}, {30, 30}}, {{0, 10}, {10, 0}}, {{10, 0}, {15, 10}}, {{15, 10}, {20, 0}}, {{15, 10}, {30, 0}},
    {{0, 10}, {10, 20}}, {{10, 20}, {15, 10}}, {{15, 10}, {20, 20}}, {{20, 20}, {30, 10}},
    {{0, 30}, {10, 20}}, {{10, 20}, {10, 30}}, {{10, 30}, {20, 20}}, {{20, 20}, {20, 30}},
    {{20, 30}, {30, 20}}}},
  // Kh2
  {"Kh2",
   {{0, 0}, {10, 0}, {20, 0}, {30, 0}, {0, 10}, {15, 10}, {30, 10}, {0, 20}, {10, 20}, {20, 20}, {30, 20}, {0, 30}, {10, 30}, {20, 30}, {30, 30}},
   {{{0, 0}, {30, 0}}, {{0, 10}, {30, 10}}, {{0, 20}, {30, 20}}, {{0, 30}, {30, 30}}, {{0, 0}, {0, 30}},
    {{30, 0}, {30, 30}}, {{0, 10}, {10, 0}}, {{10, 0}, {15, 10}}, {{15, 10}, {20, 0}}, {{15, 10}, {30, 0}},
    {{0, 10}, {10, 20}}, {{10, 20}, {15, 10}}, {{15, 10}, {20, 20}}, {{20, 20}, {30, 10}},
    {{0, 30}, {10, 20}}, {{10, 20}, {10, 30}}, {{10, 20}, {20, 30}}, {{20, 20}, {20, 30}},
    {{20, 30}, {30, 20}}}},
  // Kh3
  {"Kh3",
   {{0, 0}, {10, 0}, {20, 0}, {30, 0}, {0, 10}, {15, 10}, {30, 10}, {0, 20}, {10, 20}, {20, 20}, {30, 20}, {0, 30}, {10, 30}, {20, 30}, {30, 30}},
   {{{0, 0}, {30, 0}}, {{0, 10}, {30, 10}}, {{0, 20}, {30, 20}}, {{0, 30}, {30, 30}}, {{0, 0}, {0, 30}},
    {{30, 0}, {30, 30}}, {{0, 10}, {10, 0}}, {{10, 0}, {15, 10}}, {{15, 10}, {20, 0}}, {{15, 10}, {30, 0}},
    {{0, 10}, {10, 20}}, {{10, 20}, {15, 10}}, {{15, 10}, {20, 20}}, {{20, 20}, {30, 10}},
    {{0, 20}, {10, 30}}, {{0, 20}, {20, 30}}, {{10, 20}, {20, 30}}, {{20, 20}, {20, 30}}, {{20, 30}, {30, 20}}}},
  // Kh4
  {"Kh4",
   {{0, 0}, {10, 0}, {20, 0}, {30, 0}, {0, 10}, {15, 10}, {30, 10}, {0, 20}, {10, 20}, {20, 20}, {30, 20}, {0, 30}, {10, 30}, {20, 30}, {30, 30}},
   {{{0, 0}, {30, 0}}, {{0, 10}, {30, 10}}, {{0, 20}, {30, 20}}, {{0, 30}, {30, 30}}, {{0, 0}, {0, 30}},
    {{30, 0}, {30, 30}}, {{0, 10}, {10, 0}}, {{10, 0}, {15, 10}}, {{15, 10}, {20, 0}}, {{20, 0}, {30, 10}},
    {{0, 10}, {10, 20}}, {{10, 20}, {15, 10}}, {{15, 10}, {20, 20}}, {{20, 20}, {30, 10}},
    {{0, 20}, {10, 30}}, {{10, 20}, {10, 30}}, {{10, 20}, {20, 30}}, {{20, 20}, {20, 30}},
    {{20, 20}, {30, 30}}}},
  // Kh5
  {"Kh5",
   {{0, 0}, {10, 0}, {20, 0}, {30, 0}, {0, 10}, {15, 10}, {30, 10}, {0, 20}, {10, 20}, {20, 20}, {30, 20}, {0, 30}, {10, 30}, {20, 30}, {30, 30}},
   {{{0, 0}, {30, 0}}, {{0, 10}, {30, 10}}, {{0, 20}, {30, 20}}, {{0, 30}, {30, 30}}, {{0, 0}, {0, 30}},
    {{30, 0}, {30, 30}}, {{0, 10}, {10, 0}}, {{10, 0}, {15, 10}}, {{15, 10}, {20, 0}}, {{20, 0}, {30, 10}},
    {{0, 10}, {10, 20}}, {{10, 20}, {15, 10}}, {{15, 10}, {20, 20}}, {{20, 20}, {30, 10}},
    {{0, 30}, {10, 20}}, {{10, 20}, {10, 30}}, {{10, 20}, {20, 30}}, {{20, 20}, {20, 30}},
    {{20, 30}, {30, 20}}}},
  // Kh6
  {"Kh6",
   {{0, 0}, {10, 0}, {20, 0}, {30, 0}, {0, 10}, {15, 10}, {30, 10}, {0, 20}, {10, 20}, {20, 20}, {30, 20}, {0, 30}, {10, 30}, {20, 30}, {30, 30}},
   {{{0, 0}, {30, 0}}, {{0, 10}, {30, 10}}, {{0, 20}, {30, 20}}, {{0, 30}, {30, 30}}, {{0, 0}, {0, 30}},
    {{30, 0}, {30, 30}}, {{0, 10}, {10, 0}}, {{10, 0}, {15, 10}}, {{15, 10}, {20, 0}}, {{20, 0}, {30, 10}},
    {{0, 10}, {10, 20}}, {{10, 20}, {15, 10}}, {{15, 10}, {20, 20}}, {{20, 20}, {30, 10}},
    {{0, 20}, {10, 30}}, {{10, 20}, {10, 30}}, {{10, 20}, {20, 30}}, {{20, 20}, {20, 30}},
    {{20, 30}, {30, 20}}}},
  // Kh7
  {"Kh7",
   {{0, 0}, {10, 0}, {20, 0}, {30, 0}, {0, 10}, {15, 10}, {30, 10}, {7.5, 15}, {22.5, 15}, {0, 20}, {15, 20}, {30, 20}, {0, 30}, {10, 30}, {20, 30}, {30, 30}},
   {{{0, 0}, {30, 0}}, {{0, 10}, {30, 10}}, {{0, 20}, {30, 20}}, {{0, 30}, {30, 30}}, {{0, 0}, {0, 30}},
    {{30, 0}, {30, 30}}, {{0, 10}, {10, 0}}, {{10, 0}, {15, 10}}, {{15, 10}, {20, 0}}, {{15, 10}, {30, 0}},
    {{0, 10}, {15, 20}}, {{0, 20}, {15, 10}}, {{15, 10}, {15, 20}}, {{15, 10}, {30, 20}},
    {{15, 20}, {30, 10}}, {{0, 30}, {15, 20}}, {{10, 30}, {15, 20}}, {{15, 20}, {20, 30}},
    {{20, 30}, {30, 20}}}},
  // Kh8
  {"Kh8",
   {{0, 0}, {10, 0}, {20, 0}, {30, 0}, {0, 10}, {15, 10}, {30, 10}, {7.5, 15}, {22.5, 15}, {0, 20}, {15, 20}, {30, 20}, {0, 30}, {10, 30}, {20, 30}, {30, 30}},
   {{{0, 0}, {30, 0}}, {{0, 10}, {30, 10}}, {{0, 20}, {30, 20}}, {{0, 30}, {30, 30}}, {{0, 0}, {0, 30}},
    {{30, 0}, {30, 30}}, {{0, 10}, {10, 0}}, {{10, 0}, {15, 10}}, {{15, 10}, {20, 0}}, {{20, 0}, {30, 10}},
    {{0, 10}, {15, 20}}, {{0, 20}, {15, 10}}, {{15, 10}, {15, 20}}, {{15, 10}, {30, 20}},
    {{15, 20}, {30, 10}}, {{0, 30}, {15, 20}}, {{10, 30}, {15, 20}}, {{15, 20}, {20, 30}},
    {{20, 30}, {30, 20}}}},
  // Kh9
  {"Kh9",
   {{0, 0}, {10, 0}, {20, 0}, {30, 0}, {0, 10}, {15, 10}, {30, 10}, {7.5, 15}, {22.5, 15}, {0, 20}, {15, 20}, {30, 20}, {0, 30}, {10, 30}, {20, 30}, {30, 30}},
   {{{0, 0}, {30, 0}}, {{0, 10}, {30, 10}}, {{0, 20}, {30, 20}}, {{0, 30}, {30, 30}}, {{0, 0}, {0, 30}},
    {{30, 0}, {30, 30}}, {{0, 10}, {10, 0}}, {{10, 0}, {15, 10}}, {{15, 10}, {20, 0}}, {{20, 0}, {30, 10}},
    {{0, 10}, {15, 20}}, {{0, 20}, {15, 10}}, {{15, 10}, {15, 20}}, {{15, 10}, {30, 20}},
    {{15, 20}, {30, 10}}, {{0, 20}, {10, 30}}, {{10, 30}, {15, 20}}, {{15, 20}, {20, 30}},
    {{20, 30}, {30, 20}}}},
  // Kh10
  {"Kh10",
   {{0, 0}, {10, 0}, {20, 0}, {30, 0}, {0, 10}, {15, 10}, {30, 10}, {7.5, 15}, {22.5, 15}, {0, 20}, {15, 20}, {30, 20}, {0, 30}, {10, 30}, {20, 30}, {30, 30}},
   {{{0, 0}, {30, 0}}, {{0, 10}, {30, 10}}, {{0, 20}, {30, 20}}, {{0, 30}, {30, 30}}, {{0, 0}, {0, 30}},
    {{30, 0}, {30, 30}}, {{0, 10}, {10, 0}}, {{10, 0}, {15, 10}}, {{15, 10}, {20, 0}}, {{15, 10}, {30, 0}},
    {{0, 10}, {15, 20}}, {{0, 20}, {15, 10}}, {{7.5, 15}, {22.5, 15}}, {{15, 10}, {30, 20}},
    {{15, 20}, {30, 10}}, {{0, 30}, {15, 20}}, {{10, 30}, {15, 20}}, {{15, 20}, {20, 30}},
    {{20, 30}, {30, 20}}}},
  // Kh11
  {"Kh11",
   {{0, 0}, {10, 0}, {20, 0}, {30, 0}, {0, 10}, {15, 10}, {30, 10}, {7.5, 15}, {22.5, 15}, {0, 20}, {15, 20}, {30, 20}, {0, 30}, {10, 30}, {20, 30}, {30, 30}},
   {{{0, 0}, {30, 0}}, {{0, 10}, {30, 10}}, {{0, 20}, {30, 20}}, {{0, 30}, {30, 30}}, {{0, 0}, {0, 30}},
    {{30, 0}, {30, 30}}, {{0, 10}, {10, 0}}, {{10, 0}, {15, 10}}, {{15, 10}, {20, 0}}, {{20, 0}, {30, 10}},
    {{0, 10}, {15, 20}}, {{0, 20}, {15, 10}}, {{7.5, 15}, {22.5, 15}}, {{15, 10}, {30, 20}},
    {{15, 20}, {30, 10}}, {{0, 20}, {10, 30}}, {{10, 30}, {15, 20}}, {{15, 20}, {20, 30}},
    {{20, 30}, {30, 20}}}},
  // Kh12
  {"Kh12",
   {{0, 0}, {10, 0}, {20, 0}, {30, 0}, {0, 10}, {10, 10}, {20, 10}, {30, 10}, {0, 20}, {10, 20}, {20, 20}, {30, 20}, {0, 30}, {10, 30}, {20, 30}, {30, 30}},
   {{{0, 0}, {30, 0}}, {{0, 10}, {30, 10}}, {{0, 20}, {30, 20}}, {{0, 30}, {30, 30}}, {{0, 0}, {0, 30}},
    {{30, 0}, {30, 30}}, {{0, 0}, {10, 10}}, {{10, 0}, {10, 10}}, {{10, 10}, {20, 0}}, {{20, 0}, {20, 10}},
    {{20, 10}, {30, 0}}, {{0, 20}, {10, 10}}, {{10, 10}, {10, 20}}, {{10, 10}, {20, 20}},
    {{20, 10}, {20, 20}}, {{20, 20}, {30, 10}}, {{0, 20}, {10, 30}}, {{0, 20}, {20, 30}},
    {{10, 20}, {20, 30}}, {{20, 20}, {20, 30}}, {{20, 30}, {30, 20}}}},
  // Kh13
  {"Kh13",
   {{0, 0}, {10, 0}, {20, 0}, {30, 0}, {0, 10}, {10, 10}, {20, 10}, {30, 10}, {0, 20}, {10, 20}, {20, 20}, {30, 20}, {0, 30}, {10, 30}, {20, 30}, {30, 30}},
   {{{0, 0}, {30, 0}}, {{0, 10}, {30, 10}}, {{0, 20}, {30, 20}}, {{0, 30}, {30, 30}}, {{0, 0}, {0, 30}},
    {{30, 0}, {30, 30}}, {{0, 0}, {10, 10}}, {{10, 0}, {10, 10}}, {{10, 10}, {20, 0}}, {{20, 0}, {20, 10}},
    {{20, 10}, {30, 0}}, {{0, 20}, {10, 10}}, {{10, 10}, {10, 20}}, {{10, 10}, {20, 20}},
    {{20, 10}, {20, 20}}, {{20, 20}, {30, 10}}, {{0, 20}, {10, 30}}, {{0, 20}, {20, 30}},
    {{10, 20}, {20, 30}}, {{20, 20}, {20, 30}}, {{20, 20}, {30, 30}}}},
  // Kh14
  {"Kh14",
   {{0, 0}, {10, 0}, {20, 0}, {30, 0}, {0, 10}, {10, 10}, {20, 10}, {30, 10}, {0, 20}, {10, 20}, {20, 20}, {30, 20}, {0, 30}, {10, 30}, {20, 30}, {30, 30}},
   {{{0, 0}, {30, 0}}, {{0, 10}, {30, 10}}, {{0, 20}, {30, 20}}, {{0, 30}, {30, 30}}, {{0, 0}, {0, 30}},
    {{10, 0}, {10, 30}}, {{20, 0}, {20, 30}}, {{30, 0}, {30, 30}}, {{0, 0}, {10, 10}}, {{10, 0}, {20, 10}},
    {{20, 0}, {30, 10}}, {{0, 10}, {10, 20}}, {{10, 10}, {20, 20}}, {{20, 10}, {30, 20}},
    {{0, 20}, {10, 30}}, {{10, 20}, {20, 30}}, {{20, 20}, {30, 30}}}},
  // Kh15
  {"Kh15",
   {{0, 0}, {10, 0}, {20, 0}, {30, 0}, {0, 10}, {10, 10}, {20, 10}, {30, 10}, {0, 20}, {10, 20}, {20, 20}, {30, 20}, {0, 30}, {10, 30}, {20, 30}, {30, 30}},
   {{{0, 0}, {30, 0}}, {{0, 10}, {30, 10}}, {{0, 20}, {30, 20}}, {{0, 30}, {30, 30}}, {{0, 0}, {0, 30}},
    {{10, 0}, {10, 30}}, {{20, 0}, {20, 30}}, {{30, 0}, {30, 30}}, {{0, 10}, {10, 0}}, {{10, 0}, {20, 10}},
    {{20, 0}, {30, 10}}, {{0, 10}, {10, 20}}, {{10, 10}, {20, 20}}, {{20, 10}, {30, 20}},
    {{0, 20}, {10, 30}}, {{10, 20}, {20, 30}}, {{20, 30}, {30, 20}}}},
  // Kh16
  {"Kh16",
   {{0, 0}, {10, 0}, {20, 0}, {30, 0}, {0, 10}, {10, 10}, {20, 10}, {30, 10}, {0, 20}, {10, 20}, {20, 20}, {30, 20}, {0, 30}, {10, 30}, {20, 30}, {30, 30}},
   {{{0, 0}, {30, 0}}, {{0, 10}, {30, 10}}, {{0, 20}, {30, 20}}, {{0, 30}, {30, 30}}, {{0, 0}, {0, 30}},
    {{10, 0}, {10, 30}}, {{20, 0}, {20, 30}}, {{30, 0}, {30, 30}}, {{0, 0}, {10, 10}}, {{10, 10}, {20, 0}},
    {{20, 0}, {30, 10}}, {{0, 20}, {10, 10}}, {{10, 10}, {20, 20}}, {{20, 20}, {30, 10}},
    {{0, 20}, {10, 30}}, {{10, 30}, {20, 20}}, {{20, 20}, {30, 30}}}},
  // Kh17
  {"Kh17",
   {{0, 0}, {10, 0}, {20, 0}, {30, 0}, {0, 10}, {10, 10}, {20, 10}, {30, 10}, {0, 20}, {10, 20}, {20, 20}, {30, 20}, {0, 30}, {10, 30}, {20, 30}, {30, 30}},
   {{{0, 0}, {30, 0}}, {{0, 10}, {30, 10}}, {{0, 20}, {30, 20}}, {{0, 30}, {30, 30}}, {{0, 0}, {0, 30}},
    {{10, 0}, {10, 30}}, {{20, 0}, {20, 30}}, {{30, 0}, {30, 30}}, {{0, 10}, {10, 0}}, {{10, 10}, {20, 0}},
    {{20, 0}, {30, 10}}, {{0, 20}, {10, 10}}, {{10, 10}, {20, 20}}, {{20, 20}, {30, 10}},
    {{0, 20}, {10, 30}}, {{10, 30}, {20, 20}}, {{20, 30}, {30, 20}}}},
  // Kh18
  {"Kh18",
   {{0, 0}, {10, 0}, {20, 0}, {30, 0}, {0, 10}, {10, 10}, {20, 10}, {30, 10}, {0, 20}, {10, 20}, {20, 20}, {30, 20}, {0, 30}, {10, 30}, {20, 30}, {30, 30}},
   {{{0, 0}, {30, 0}}, {{0, 10}, {30, 10}}, {{0, 20}, {30, 20}}, {{0, 30}, {30, 30}}, {{0, 0}, {0, 30}},
    {{10, 0}, {10, 30}}, {{20, 0}, {20, 30}}, {{30, 0}, {30, 30}}, {{0, 0}, {10, 10}}, {{10, 10}, {20, 0}},
    {{20, 0}, {30, 10}}, {{0, 20}, {10, 10}}, {{10, 10}, {20, 20}}, {{20, 20}, {30, 10}},
    {{0, 20}, {10, 30}}, {{10, 30}, {20, 20}}, {{20, 30}, {30, 20}}}},
  // Kh19
  {"Kh19",
   {{0, 0}, {10, 0}, {20, 0}, {30, 0}, {0, 10}, {10, 10}, {20, 10}, {30, 10}, {0, 20}, {10, 20}, {20, 20}, {30, 20}, {0, 30}, {10, 30}, {20, 30}, {30, 30}},
   {{{0, 0}, {30, 0}}, {{0, 10}, {30, 10}}, {{0, 20}, {30, 20}}, {{0, 30}, {30, 30}}, {{0, 0}, {0, 30}},
    {{10, 0}, {10, 30}}, {{20, 0}, {20, 30}}, {{30, 0}, {30, 30}}, {{0, 10}, {10, 0}}, {{10, 0}, {20, 10}},
    {{20, 10}, {30, 0}}, {{0, 20}, {10, 10}}, {{10, 10}, {20, 20}}, {{20, 20}, {30, 10}},
    {{0, 20}, {10, 30}}, {{10, 30}, {20, 20}}, {{20, 20}, {30, 30}}}},
  // Kh20
  {"Kh20",
   {{0, 0}, {10, 0}, {20, 0}, {30, 0}, {0, 10}, {10, 10}, {20, 10}, {30, 10}, {0, 20}, {10, 20}, {20, 20}, {30, 20}, {0, 30}, {10, 30}, {20, 30}, {30, 30}},
   {{{0, 0}, {30, 0}}, {{0, 10}, {30, 10}}, {{0, 20}, {30, 20}}, {{0, 30}, {30, 30}}, {{0, 0}, {0, 30}},
    {{10, 0}, {10, 30}}, {{20, 0}, {20, 30}}, {{30, 0}, {30, 30}}, {{0, 10}, {10, 0}}, {{10, 0}, {20, 10}},
    {{20, 0}, {30, 10}}, {{0, 20}, {10, 10}}, {{10, 10}, {20, 20}}, {{20, 20}, {30, 10}},
    {{0, 20}, {10, 30}}, {{10, 30}, {20, 20}}, {{20, 20}, {30, 30}}}},
  // Kh21
  {"Kh21",
   {{0, 0}, {10, 0}, {20, 0}, {30, 0}, {0, 10}, {10, 10}, {20, 10}, {30, 10}, {0, 20}, {10, 20}, {20, 20}, {30, 20}, {0, 30}, {10, 30}, {20, 30}, {30, 30}},
   {{{0, 0}, {30, 0}}, {{0, 10}, {30, 10}}, {{0, 20}, {30, 20}}, {{0, 30}, {30, 30}}, {{0, 0}, {0, 30}},
    {{10, 0}, {10, 30}}, {{20, 0}, {20, 30}}, {{30, 0}, {30, 30}}, {{0, 10}, {10, 0}}, {{10, 10}, {20, 0}},
    {{20, 10}, {30, 0}}, {{0, 20}, {10, 10}}, {{10, 10}, {20, 20}}, {{20, 20}, {30, 10}},
    {{0, 20}, {10, 30}}, {{10, 30}, {20, 20}}, {{20, 20}, {30, 30}}}},
  // Kh22
  {"Kh22",
   {{0, 0}, {10, 0}, {20, 0}, {30, 0}, {0, 10}, {10, 10}, {20, 10}, {30, 10}, {0, 20}, {10, 20}, {20, 20}, {30, 20}, {0, 30}, {10, 30}, {20, 30}, {30, 30}},
   {{{0, 0}, {30, 0}}, {{0, 10}, {30, 10}}, {{0, 20}, {30, 20}}, {{0, 30}, {30, 30}}, {{0, 0}, {0, 30}},
    {{10, 0}, {10, 30}}, {{20, 0}, {20, 30}}, {{30, 0}, {30, 30}}, {{0, 0}, {10, 10}}, {{10, 0}, {20, 10}},
    {{20, 0}, {30, 10}}, {{0, 20}, {10, 10}}, {{10, 10}, {20, 20}}, {{20, 20}, {30, 10}},
    {{0, 20}, {10, 30}}, {{10, 20}, {20, 30}}, {{20, 30}, {30, 20}}}},
  // Kh23
  {"Kh23",
   {{0, 0}, {10, 0}, {20, 0}, {30, 0}, {0, 10}, {10, 10}, {20, 10}, {30, 10}, {0, 20}, {10, 20}, {20, 20}, {30, 20}, {0, 30}, {10, 30}, {20, 30}, {30, 30}},
   {{{0, 0}, {30, 0}}, {{0, 10}, {30, 10}}, {{0, 20}, {30, 20}}, {{0, 30}, {30, 30}}, {{0, 0}, {0, 30}},
    {{10, 0}, {10, 30}}, {{20, 0}, {20, 30}}, {{30, 0}, {30, 30}}, {{0, 10}, {10, 0}}, {{10, 10}, {20, 0}},
    {{20, 10}, {30, 0}}, {{0, 20}, {10, 10}}, {{10, 10}, {20, 20}}, {{20, 20}, {30, 10}},
    {{0, 20}, {10, 30}}, {{10, 20}, {20, 30}}, {{20, 20}, {30, 30}}}},
  // Kh24
  {"Kh24",
   {{0, 0}, {10, 0}, {20, 0}, {30, 0}, {0, 10}, {10, 10}, {20, 10}, {30, 10}, {0, 20}, {10, 20}, {20, 20}, {30, 20}, {0, 30}, {10, 30}, {20, 30}, {30, 30}},
   {{{0, 0}, {30, 0}}, {{0, 10}, {30, 10}}, {{0, 20}, {30, 20}}, {{0, 30}, {30, 30}}, {{0, 0}, {0, 30}},
    {{10, 0}, {10, 30}}, {{20, 0}, {20, 30}}, {{30, 0}, {30, 30}}, {{0, 0}, {10, 10}}, {{10, 0}, {20, 10}},
    {{20, 0}, {30, 10}}, {{0, 20}, {10, 10}}, {{10, 10}, {20, 20}}, {{20, 20}, {30, 10}},
    {{0, 20}, {10, 30}}, {{10, 20}, {20, 30}}, {{20, 20}, {30, 30}}}},
  // Kh25
  {"Kh25",
   {{0, 0}, {10, 0}, {20, 0}, {30, 0}, {0, 10}, {15, 10}, {30, 10}, {7.5, 15}, {22.5, 15}, {0, 20}, {15, 20}, {30, 20}, {5, 25}, {0, 30}, {10, 30}, {20, 30}, {30, 30}},
   {{{0, 0}, {30, 0}}, {{0, 10}, {30, 10}}, {{0, 20}, {30, 20}}, {{0, 30}, {30, 30}}, {{0, 0}, {0, 30}},
    {{30, 0}, {30, 30}}, {{0, 0}, {15, 10}}, {{10, 0}, {15, 10}}, {{10, 0}, {30, 10}}, {{20, 0}, {30, 10}},
    {{0, 10}, {15, 20}}, {{0, 20}, {15, 10}}, {{15, 10}, {15, 20}}, {{15, 10}, {30, 20}},
    {{15, 20}, {30, 10}}, {{0, 20}, {10, 30}}, {{0, 30}, {5, 25}}, {{5, 25}, {15, 20}}, {{10, 30}, {15, 20}},
    {{15, 20}, {20, 30}}, {{15, 20}, {30, 30}}}},
  // Kc1
  {"Kc1",
   {{-10, -10}, {10, -10}, {-20, -5}, {0, -5}, {20, -5}, {0, 0}, {-20, 5}, {0, 5}, {20, 5}, {-10, 10}, {10, 10}, {-15, 0}, {-10, 5}, {15, 0}, {10, 5}},
   {{{-20, -5}, {-20, 5}}, {{0, -5}, {0, 5}}, {{20, -5}, {20, 5}}, {{-20, -5}, {-10, -10}},
    {{-10, -10}, {0, -5}}, {{0, -5}, {10, -10}}, {{10, -10}, {20, -5}}, {{-20, 5}, {-10, 10}},
    {{-10, 10}, {0, 5}}, {{0, 5}, {10, 10}}, {{10, 10}, {20, 5}}, {{-10, -10}, {-15, 0}},
    {{-10, -10}, {0, 0}}, {{-20, -5}, {-15, 0}}, {{-15, 0}, {0, 0}}, {{-15, 0}, {-20, 5}},
    {{-15, 0}, {-10, 5}}, {{-10, 5}, {0, 0}}, {{-20, 5}, {0, 5}}, {{-10, 5}, {-10, 10}},
    {{10, -10}, {15, 0}}, {{10, -10}, {0, 0}}, {{20, -5}, {15, 0}}, {{15, 0}, {0, 0}}, {{15, 0}, {20, 5}},
    {{15, 0}, {10, 5}}, {{10, 5}, {0, 0}}, {{20, 5}, {0, 5}}, {{10, 5}, {10, 10}}}},
  // Kc2
  {"Kc2",
   {{-10, -10}, {10, -10}, {-20, -5}, {0, -5}, {20, -5}, {0, 0}, {-20, 5}, {0, 5}, {20, 5}, {-10, 10}, {10, 10}, {-15, 0}, {-10, 5}, {10, -5}, {15, 0}, {10, 5}},
   {{{-20, -5}, {-20, 5}}, {{0, -5}, {0, 5}}, {{20, -5}, {20, 5}}, {{-20, -5}, {-10, -10}},
    {{-10, -10}, {0, -5}}, {{0, -5}, {10, -10}}, {{10, -10}, {20, -5}}, {{-20, 5}, {-10, 10}},
    {{-10, 10}, {0, 5}}, {{0, 5}, {10, 10}}, {{10, 10}, {20, 5}}, {{-10, -10}, {-15, 0}},
    {{-10, -10}, {0, 0}}, {{-20, -5}, {-15, 0}}, {{-15, 0}, {0, 0}}, {{-15, 0}, {-20, 5}},
    {{-15, 0}, {-10, 5}}, {{-10, 5}, {0, 0}}, {{-20, 5}, {0, 5}}, {{-10, 5}, {-10, 10}},
    {{10, -10}, {10, 10}}, {{0, -5}, {20, -5}}, {{10, -5}, {0, 0}}, {{10, -5}, {20, 5}}, {{0, 0}, {10, 5}},
    {{10, 5}, {20, -5}}, {{20, 5}, {0, 5}}}},
  // Kc3
  {"Kc3",
   {{-10, -10}, {10, -10}, {-20, -5}, {0, -5}, {20, -5}, {0, 0}, {-20, 5}, {0, 5}, {20, 5}, {-10, 10}, {10, 10}, {-10, -5}, {-15, 0}, {-10, 5}, {10, -5}, {15, 0}, {10, 5}},
   {{{-20, -5}, {-20, 5}}, {{0, -5}, {0, 5}}, {{20, -5}, {20, 5}}, {{-20, -5}, {-10, -10}},
    {{-10, -10}, {0, -5}}, {{0, -5}, {10, -10}}, {{10, -10}, {20, -5}}, {{-20, 5}, {-10, 10}},
    {{-10, 10}, {0, 5}}, {{0, 5}, {10, 10}}, {{10, 10}, {20, 5}}, {{-10, -10}, {-10, 10}},
    {{0, -5}, {-20, -5}}, {{-10, -5}, {0, 0}}, {{-10, -5}, {-20, 5}}, {{0, 0}, {-10, 5}},
    {{-10, 5}, {-20, -5}}, {{-20, 5}, {0, 5}}, {{10, -10}, {10, 10}}, {{0, -5}, {20, -5}},
    {{10, -5}, {0, 0}}, {{10, -5}, {20, 5}}, {{0, 0}, {10, 5}}, {{10, 5}, {20, -5}}, {{20, 5}, {0, 5}}}},
  // Kc4
  {"Kc4",
   {{-10, -10}, {10, -10}, {-20, -5}, {0, -5}, {20, -5}, {0, 0}, {-20, 5}, {0, 5}, {20, 5}, {-10, 10}, {10, 10}, {-10, -5}, {-15, 0}, {-10, 5}, {6, -4}, {15, -2.5}, {12.73, 3.18}},
   {{{-20, -5}, {-20, 5}}, {{0, -5}, {0, 5}}, {{20, -5}, {20, 5}}, {{-20, -5}, {-10, -10}},
    {{-10, -10}, {0, -5}}, {{0, -5}, {10, -10}}, {{10, -10}, {20, -5}}, {{-20, 5}, {-10, 10}},
    {{-10, 10}, {0, 5}}, {{0, 5}, {10, 10}}, {{10, 10}, {20, 5}}, {{-10, -10}, {-10, 10}},
    {{0, -5}, {-20, -5}}, {{-10, -5}, {0, 0}}, {{-10, -5}, {-20, 5}}, {{0, 0}, {-10, 5}},
    {{-10, 5}, {-20, -5}}, {{-20, 5}, {0, 5}}, {{10, -10}, {6, -4}}, {{10, -10}, {20, 5}},
    {{0, -5}, {15, -2.5}}, {{20, -5}, {15, -2.5}}, {{0, 0}, {6, -4}}, {{0, 0}, {15, -2.5}},
    {{0, 0}, {20, 5}}, {{0, 0}, {10, 10}}, {{10, 10}, {15, -2.5}}}},
  };
  return all;
}

}  // namespace trisurf
