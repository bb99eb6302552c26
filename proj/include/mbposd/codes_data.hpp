#pragma once
// Generated by scripts/embed_codes.py from codes/*.alist; do not edit.

#include <string_view>

namespace mbposd::data {

inline constexpr std::string_view k_ccsds_128_64 = R"ALIST(128 64
5 8
5 5 5 5 5 5 5 5 5 5 5 5 5 5 5 5 5 5 5 5 5 5 5 5 5 5 5 5 5 5 5 5 5 5 5 5 5 5 5 5 5 5 5 5 5 5 5 5 5 5 5 5 5 5 5 5 5 5 5 5 5 5 5 5 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3
8 8 8 8 8 8 8 8 8 8 8 8 8 8 8 8 8 8 8 8 8 8 8 8 8 8 8 8 8 8 8 8 8 8 8 8 8 8 8 8 8 8 8 8 8 8 8 8 8 8 8 8 8 8 8 8 8 8 8 8 8 8 8 8
1 10 27 45 49
2 11 28 46 50
3 12 29 47 51
4 13 30 48 52
5 14 31 33 53
6 15 32 34 54
7 16 17 35 55
1 8 18 36 56
2 9 19 37 57
3 10 20 38 58
4 11 21 39 59
5 12 22 40 60
6 13 23 41 61
7 14 24 42 62
8 15 25 43 63
9 16 26 44 64
15 17 18 48 64
16 18 19 33 49
1 19 20 34 50
2 20 21 35 51
3 21 22 36 52
4 22 23 37 53
5 23 24 38 54
6 24 25 39 55
7 25 26 40 56
8 26 27 41 57
9 27 28 42 58
10 28 29 43 59
11 29 30 44 60
12 30 31 45 61
13 31 32 46 62
14 17 32 47 63
3 17 33 34 56
4 18 34 35 57
5 19 35 36 58
6 20 36 37 59
7 21 37 38 60
8 22 38 39 61
9 23 39 40 62
10 24 40 41 63
11 25 41 42 64
12 26 42 43 49
13 27 43 44 50
14 28 44 45 51
15 29 45 46 52
16 30 46 47 53
1 31 47 48 54
2 32 33 48 55
11 32 35 49 52
12 17 36 50 53
13 18 37 51 54
14 19 38 52 55
15 20 39 53 56
16 21 40 54 57
1 22 41 55 58
2 23 42 56 59
3 24 43 57 60
4 25 44 58 61
5 26 45 59 62
6 27 46 60 63
7 28 47 61 64
8 29 48 49 62
9 30 33 50 63
10 31 34 51 64
17 38 51 0 0
18 39 52 0 0
19 40 53 0 0
20 41 54 0 0
21 42 55 0 0
22 43 56 0 0
23 44 57 0 0
24 45 58 0 0
25 46 59 0 0
26 47 60 0 0
27 48 61 0 0
28 33 62 0 0
29 34 63 0 0
30 35 64 0 0
31 36 49 0 0
32 37 50 0 0
1 33 64 0 0
2 34 49 0 0
3 35 50 0 0
4 36 51 0 0
5 37 52 0 0
6 38 53 0 0
7 39 54 0 0
8 40 55 0 0
9 41 56 0 0
10 42 57 0 0
11 43 58 0 0
12 44 59 0 0
13 45 60 0 0
14 46 61 0 0
15 47 62 0 0
16 48 63 0 0
4 17 49 0 0
5 18 50 0 0
6 19 51 0 0
7 20 52 0 0
8 21 53 0 0
9 22 54 0 0
10 23 55 0 0
11 24 56 0 0
12 25 57 0 0
13 26 58 0 0
14 27 59 0 0
15 28 60 0 0
16 29 61 0 0
1 30 62 0 0
2 31 63 0 0
3 32 64 0 0
1 26 46 0 0
2 27 47 0 0
3 28 48 0 0
4 29 33 0 0
5 30 34 0 0
6 31 35 0 0
7 32 36 0 0
8 17 37 0 0
9 18 38 0 0
10 19 39 0 0
11 20 40 0 0
12 21 41 0 0
13 22 42 0 0
14 23 43 0 0
15 24 44 0 0
16 25 45 0 0
1 8 19 47 55 81 110 113
2 9 20 48 56 82 111 114
3 10 21 33 57 83 112 115
4 11 22 34 58 84 97 116
5 12 23 35 59 85 98 117
6 13 24 36 60 86 99 118
7 14 25 37 61 87 100 119
8 15 26 38 62 88 101 120
9 16 27 39 63 89 102 121
1 10 28 40 64 90 103 122
2 11 29 41 49 91 104 123
3 12 30 42 50 92 105 124
4 13 31 43 51 93 106 125
5 14 32 44 52 94 107 126
6 15 17 45 53 95 108 127
7 16 18 46 54 96 109 128
7 17 32 33 50 65 97 120
8 17 18 34 51 66 98 121
9 18 19 35 52 67 99 122
10 19 20 36 53 68 100 123
11 20 21 37 54 69 101 124
12 21 22 38 55 70 102 125
13 22 23 39 56 71 103 126
14 23 24 40 57 72 104 127
15 24 25 41 58 73 105 128
16 25 26 42 59 74 106 113
1 26 27 43 60 75 107 114
2 27 28 44 61 76 108 115
3 28 29 45 62 77 109 116
4 29 30 46 63 78 110 117
5 30 31 47 64 79 111 118
6 31 32 48 49 80 112 119
5 18 33 48 63 76 81 116
6 19 33 34 64 77 82 117
7 20 34 35 49 78 83 118
8 21 35 36 50 79 84 119
9 22 36 37 51 80 85 120
10 23 37 38 52 65 86 121
11 24 38 39 53 66 87 122
12 25 39 40 54 67 88 123
13 26 40 41 55 68 89 124
14 27 41 42 56 69 90 125
15 28 42 43 57 70 91 126
16 29 43 44 58 71 92 127
1 30 44 45 59 72 93 128
2 31 45 46 60 73 94 113
3 32 46 47 61 74 95 114
4 17 47 48 62 75 96 115
1 18 42 49 62 79 82 97
2 19 43 50 63 80 83 98
3 20 44 51 64 65 84 99
4 21 45 49 52 66 85 100
5 22 46 50 53 67 86 101
6 23 47 51 54 68 87 102
7 24 48 52 55 69 88 103
8 25 33 53 56 70 89 104
9 26 34 54 57 71 90 105
10 27 35 55 58 72 91 106
11 28 36 56 59 73 92 107
12 29 37 57 60 74 93 108
13 30 38 58 61 75 94 109
14 31 39 59 62 76 95 110
15 32 40 60 63 77 96 111
16 17 41 61 64 78 81 112
)ALIST";

inline constexpr std::string_view k_ldpc_96_48 = R"ALIST(96 48
3 6
3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3
6 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6
5 9 38
10 19 36
29 33 37
8 17 43
2 34 41
1 15 45
14 39 44
7 22 30
3 4 6
11 42 48
23 31 40
12 27 32
20 28 35
18 21 47
16 24 46
13 25 26
8 36 45
13 23 47
9 27 43
17 33 42
12 25 41
20 39 48
3 24 40
11 30 46
2 15 22
19 26 35
5 6 44
4 18 28
14 16 32
3 34 37
1 21 38
7 8 31
10 16 29
26 38 46
30 37 47
19 22 44
23 36 39
21 41 48
2 17 28
15 32 33
10 18 27
14 34 35
4 25 45
5 13 42
1 40 43
9 20 29
6 7 12
11 27 31
15 20 24
8 16 48
5 28 32
3 13 22
14 30 45
31 33 35
11 25 29
1 19 37
9 23 34
6 21 36
17 44 46
7 18 24
2 26 39
4 39 43
10 40 42
12 35 47
14 38 41
4 34 46
21 22 29
3 5 30
8 20 37
1 13 16
2 7 10
31 38 45
12 17 24
11 23 28
26 32 40
19 41 43
7 9 42
15 44 47
25 33 44
6 16 18
32 36 48
13 20 27
8 26 28
30 42 43
4 17 21
9 10 14
6 11 35
36 46 47
22 25 37
5 23 27
19 24 31
12 38 39
1 29 34
3 15 48
2 18 33
40 41 45
6 31 45 56 70 93
5 25 39 61 71 95
9 23 30 52 68 94
9 28 43 62 66 85
1 27 44 51 68 90
9 27 47 58 80 87
8 32 47 60 71 77
4 17 32 50 69 83
1 19 46 57 77 86
2 33 41 63 71 86
10 24 48 55 74 87
12 21 47 64 73 92
16 18 44 52 70 82
7 29 42 53 65 86
6 25 40 49 78 94
15 29 33 50 70 80
4 20 39 59 73 85
14 28 41 60 80 95
2 26 36 56 76 91
13 22 46 49 69 82
14 31 38 58 67 85
8 25 36 52 67 89
11 18 37 57 74 90
15 23 49 60 73 91
16 21 43 55 79 89
16 26 34 61 75 83
12 19 41 48 82 90
13 28 39 51 74 83
3 33 46 55 67 93
8 24 35 53 68 84
11 32 48 54 72 91
12 29 40 51 75 81
3 20 40 54 79 95
5 30 42 57 66 93
13 26 42 54 64 87
2 17 37 58 81 88
3 30 35 56 69 89
1 31 34 65 72 92
7 22 37 61 62 92
11 23 45 63 75 96
5 21 38 65 76 96
10 20 44 63 77 84
4 19 45 62 76 84
7 27 36 59 78 79
6 17 43 53 72 96
15 24 34 59 66 88
14 18 35 64 78 88
10 22 38 50 81 94
)ALIST";

inline constexpr std::string_view k_ldpc_32_16 = R"ALIST(32 16
3 6
3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3 3
6 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6
5 13 14
3 6 7
2 9 15
1 8 12
10 11 16
3 4 13
1 5 9
6 8 16
2 4 12
7 11 15
10 12 14
4 14 15
1 7 13
2 3 16
6 9 10
5 8 15
4 9 11
2 7 10
3 8 11
1 14 16
6 12 13
3 5 10
4 7 16
8 9 14
1 2 11
5 12 16
10 13 15
4 5 6
2 6 14
3 12 15
9 11 13
1 7 8
4 7 13 20 25 32
3 9 14 18 25 29
2 6 14 19 22 30
6 9 12 17 23 28
1 7 16 22 26 28
2 8 15 21 28 29
2 10 13 18 23 32
4 8 16 19 24 32
3 7 15 17 24 31
5 11 15 18 22 27
5 10 17 19 25 31
4 9 11 21 26 30
1 6 13 21 27 31
1 11 12 20 24 29
3 10 12 16 27 30
5 8 14 20 23 26
)ALIST";

inline constexpr std::string_view k_hamming_7_4 = R"ALIST(7 3
3 4
1 1 2 1 2 2 3
4 4 4
1 0 0
2 0 0
1 2 0
3 0 0
1 3 0
2 3 0
1 2 3
1 3 5 7
2 3 6 7
4 5 6 7
)ALIST";

}  // namespace mbposd::data
