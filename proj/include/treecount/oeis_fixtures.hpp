#pragma once

// Bundled b-file snippets for offline runs: the first eleven triangle
// rows of each cited sequence, in the b-file text format.

namespace treecount::fixtures {

inline constexpr const char* kA071207 = R"ftx(0 1
1 1
2 1
3 4
4 4
5 1
6 27
7 27
8 9
9 1
10 256
11 256
12 96
13 16
14 1
15 3125
16 3125
17 1250
18 250
19 25
20 1
21 46656
22 46656
23 19440
24 4320
25 540
26 36
27 1
28 823543
29 823543
30 352947
31 84035
32 12005
33 1029
34 49
35 1
36 16777216
37 16777216
38 7340032
39 1835008
40 286720
41 28672
42 1792
43 64
44 1
45 387420489
46 387420489
47 172186884
48 44641044
49 7440174
50 826686
51 61236
52 2916
53 81
54 1
55 10000000000
56 10000000000
57 4500000000
58 1200000000
59 210000000
60 25200000
61 2100000
62 120000
63 4500
64 100
65 1
)ftx";

inline constexpr const char* kA232006 = R"ftx(0 1
1 0
2 1
3 0
4 1
5 1
6 0
7 3
8 2
9 1
10 0
11 16
12 8
13 3
14 1
15 0
16 125
17 50
18 15
19 4
20 1
21 0
22 1296
23 432
24 108
25 24
26 5
27 1
28 0
29 16807
30 4802
31 1029
32 196
33 35
34 6
35 1
36 0
37 262144
38 65536
39 12288
40 2048
41 320
42 48
43 7
44 1
45 0
46 4782969
47 1062882
48 177147
49 26244
50 3645
51 486
52 63
53 8
54 1
55 0
56 100000000
57 20000000
58 3000000
59 400000
60 50000
61 6000
62 700
63 80
64 9
65 1
)ftx";

}  // namespace treecount::fixtures
