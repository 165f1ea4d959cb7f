// Transcription of the published catalogue tables; see data/tables/.
namespace paratopia {

extern const char* kTable12Data;
extern const char* kTable123Data;

const char* kTable12Data = R"tbl(# (12) catalogue: n beta gamma
2 1^2 1^2
2 2 2
3 1^3 1^3
3 1^3 2.1
3 3 2.1
3 3 3
4 1^4 1^4
4 1^4 2.1^2
4 2^2 2.1^2
4 2^2 2^2
4 2^2 4
4 3.1 3.1
4 4 2^2
4 4 4
5 1^5 1^5
5 1^5 2.1^3
5 1^5 2^2.1
5 2^2.1 4.1
5 5 2^2.1
5 5 5
6 1^6 1^6
6 1^6 2.1^4
6 1^6 2^2.1^2
6 2^2.1^2 4.1^2
6 2^3 2^3
6 2^3 4.2
6 3.1^3 3.2.1
6 3^2 2.1^4
6 3^2 2^2.1^2
6 3^2 3.1^3
6 3^2 3.2.1
6 3^2 3^2
6 5.1 5.1
6 6 2^3
6 6 4.2
6 6 6
7 1^7 1^7
7 1^7 2.1^5
7 1^7 2^2.1^3
7 1^7 2^3.1
7 2^2.1^3 4.2.1
7 3^2.1 3^2.1
7 3^2.1 6.1
7 7 2^3.1
7 7 7
8 1^8 1^8
8 1^8 2.1^6
8 1^8 2^2.1^4
8 1^8 2^3.1^2
8 2^2.1^4 4.2.1^2
8 2^4 2.1^6
8 2^4 2^2.1^4
8 2^4 2^3.1^2
8 2^4 2^4
8 2^4 4.1^4
8 2^4 4.2.1^2
8 2^4 4.2^2
8 2^4 4^2
8 3^2.1^2 3^2.1^2
8 3^2.1^2 6.1^2
8 4^2 2^2.1^4
8 4^2 2^3.1^2
8 4^2 2^4
8 4^2 4.1^4
8 4^2 4.2.1^2
8 4^2 4.2^2
8 4^2 4^2
8 4^2 8
8 5.1^3 5.2.1
8 6.2 3^2.2
8 6.2 6.2
8 7.1 7.1
8 8 2^4
8 8 4.2^2
8 8 4^2
8 8 8
9 1^9 1^9
9 1^9 2.1^7
9 1^9 2^2.1^5
9 1^9 2^3.1^3
9 1^9 2^4.1
9 2^4.1 4^2.1
9 3^2.1^3 3^2.1^3
9 3^2.1^3 3^2.2.1
9 3^2.1^3 6.1^3
9 3^2.1^3 6.2.1
9 3^3 2^3.1^3
9 3^3 2^4.1
9 3^3 3.2^2.1^2
9 3^3 3.2^3
9 3^3 3^2.2.1
9 3^3 3^3
9 3^3 6.1^3
9 3^3 6.2.1
9 3^3 6.3
9 4^2.1 8.1
9 9 2^4.1
9 9 3.2^3
9 9 6.2.1
9 9 6.3
9 9 9
10 1^10 1^10
10 1^10 2.1^8
10 1^10 2^2.1^6
10 1^10 2^3.1^4
10 1^10 2^4.1^2
10 2^4.1^2 4^2.1^2
10 2^5 2^5
10 2^5 4.2^3
10 2^5 4^2.2
10 3^2.1^4 3^2.1^4
10 3^2.1^4 3^2.2.1^2
10 3^2.1^4 6.1^4
10 3^2.1^4 6.2.1^2
10 3^3.1 3^3.1
10 3^3.1 6.3.1
10 4^2.1^2 8.1^2
10 4^2.2 8.2
10 5.1^5 5.2^2.1
10 5^2 2^2.1^6
10 5^2 2^3.1^4
10 5^2 2^4.1^2
10 5^2 5.1^5
10 5^2 5.2.1^3
10 5^2 5.2^2.1
10 5^2 5^2
10 6.2^2 6.2^2
10 6.2^2 6.4
10 7.1^3 7.2.1
10 9.1 9.1
10 10 2^5
10 10 4.2^3
10 10 4^2.2
10 10 10
11 1^11 1^11
11 1^11 2.1^9
11 1^11 2^2.1^7
11 1^11 2^3.1^5
11 1^11 2^4.1^3
11 1^11 2^5.1
11 2^4.1^3 4^2.1^3
11 2^4.1^3 4^2.2.1
11 3^2.1^5 3^2.2.1^3
11 3^2.1^5 3^2.2^2.1
11 3^2.1^5 6.2.1^3
11 3^2.1^5 6.2^2.1
11 3^3.1^2 6.3.1^2
11 4^2.1^3 8.1^3
11 4^2.1^3 8.2.1
11 5^2.1 5^2.1
11 5^2.1 10.1
11 11 2^5.1
11 11 11
12 1^12 1^12
12 1^12 2.1^10
12 1^12 2^2.1^8
12 1^12 2^3.1^6
12 1^12 2^4.1^4
12 1^12 2^5.1^2
12 2^4.1^4 4^2.1^4
12 2^4.1^4 4^2.2.1^2
12 2^6 2.1^10
12 2^6 2^2.1^8
12 2^6 2^3.1^6
12 2^6 2^4.1^4
12 2^6 2^5.1^2
12 2^6 2^6
12 2^6 4.1^8
12 2^6 4.2.1^6
12 2^6 4.2^2.1^4
12 2^6 4.2^3.1^2
12 2^6 4.2^4
12 2^6 4^2.1^4
12 2^6 4^2.2.1^2
12 2^6 4^2.2^2
12 2^6 4^3
12 3^2.1^6 3^2.2.1^4
12 3^2.1^6 3^2.2^2.1^2
12 3^2.1^6 6.2.1^4
12 3^2.1^6 6.2^2.1^2
12 3^3.1^3 3^3.1^3
12 3^3.1^3 3^3.2.1
12 3^3.1^3 6.3.1^3
12 3^3.1^3 6.3.2.1
12 3^4 2.1^10
12 3^4 2^2.1^8
12 3^4 2^3.1^6
12 3^4 2^4.1^4
12 3^4 2^5.1^2
12 3^4 3.1^9
12 3^4 3.2.1^7
12 3^4 3.2^2.1^5
12 3^4 3.2^3.1^3
12 3^4 3.2^4.1
12 3^4 3^2.1^6
12 3^4 3^2.2.1^4
12 3^4 3^2.2^2.1^2
12 3^4 3^2.2^3
12 3^4 3^3.1^3
12 3^4 3^3.2.1
12 3^4 3^4
12 3^4 6.1^6
12 3^4 6.2.1^4
12 3^4 6.2^2.1^2
12 3^4 6.3.1^3
12 3^4 6.3.2.1
12 3^4 6.3^2
12 4^2.1^4 8.1^4
12 4^2.1^4 8.2.1^2
12 4^2.2^2 8.2.1^2
12 4^2.2^2 8.2^2
12 4^2.2^2 8.4
12 4^3 2^6
12 4^3 4.2^4
12 4^3 4^2.2^2
12 4^3 4^3
12 4^3 8.2^2
12 4^3 8.4
12 5^2.1^2 5^2.1^2
12 5^2.1^2 10.1^2
12 6.2^3 3^2.2^3
12 6.2^3 4.3^2.2
12 6.2^3 6.2^3
12 6.2^3 6.4.2
12 6^2 2^3.1^6
12 6^2 2^4.1^4
12 6^2 2^5.1^2
12 6^2 2^6
12 6^2 3.2^2.1^5
12 6^2 3.2^3.1^3
12 6^2 3.2^4.1
12 6^2 3^2.2.1^4
12 6^2 3^2.2^2.1^2
12 6^2 3^2.2^3
12 6^2 3^3.2.1
12 6^2 4.2.1^6
12 6^2 4.2^2.1^4
12 6^2 4.2^3.1^2
12 6^2 4.2^4
12 6^2 4.3.1^5
12 6^2 4.3.2.1^3
12 6^2 4.3.2^2.1
12 6^2 4.3^2.1^2
12 6^2 4.3^2.2
12 6^2 4^2.1^4
12 6^2 4^2.2.1^2
12 6^2 4^2.2^2
12 6^2 4^2.3.1
12 6^2 4^3
12 6^2 6.1^6
12 6^2 6.2.1^4
12 6^2 6.2^2.1^2
12 6^2 6.2^3
12 6^2 6.3.1^3
12 6^2 6.3.2.1
12 6^2 6.3^2
12 6^2 6.4.1^2
12 6^2 6.4.2
12 6^2 6^2
12 6^2 12
12 7.1^5 7.2^2.1
12 9.1^3 9.2.1
12 9.3 9.2.1
12 9.3 9.3
12 10.2 5^2.2
12 10.2 10.2
12 11.1 11.1
12 12 2^6
12 12 4.2^4
12 12 4^2.2^2
12 12 4^3
12 12 6.2^3
12 12 6.4.2
12 12 6^2
12 12 8.2^2
12 12 8.4
12 12 12
13 1^13 1^13
13 1^13 2.1^11
13 1^13 2^2.1^9
13 1^13 2^3.1^7
13 1^13 2^4.1^5
13 1^13 2^5.1^3
13 1^13 2^6.1
13 2^4.1^5 4^2.1^5
13 2^4.1^5 4^2.2.1^3
13 2^4.1^5 4^2.2^2.1
13 2^6.1 4^3.1
13 3^3.1^4 6.3.2.1^2
13 3^4.1 3^4.1
13 3^4.1 6.3^2.1
13 3^4.1 6^2.1
13 4^2.1^5 8.2.1^3
13 4^2.1^5 8.2^2.1
13 4^2.2^2.1 8.4.1
13 5^2.1^3 5^2.1^3
13 5^2.1^3 5^2.2.1
13 5^2.1^3 10.1^3
13 5^2.1^3 10.2.1
13 6^2.1 12.1
13 13 2^6.1
13 13 13
14 1^14 1^14
14 1^14 2.1^12
14 1^14 2^2.1^10
14 1^14 2^3.1^8
14 1^14 2^4.1^6
14 1^14 2^5.1^4
14 1^14 2^6.1^2
14 2^4.1^6 4^2.1^6
14 2^4.1^6 4^2.2.1^4
14 2^4.1^6 4^2.2^2.1^2
14 2^6.1^2 4^3.1^2
14 2^7 2^7
14 2^7 4.2^5
14 2^7 4^2.2^3
14 2^7 4^3.2
14 3^3.1^5 3^3.2.1^3
14 3^3.1^5 3^3.2^2.1
14 3^3.1^5 6.3.2.1^3
14 3^3.1^5 6.3.2^2.1
14 3^4.1^2 3^4.1^2
14 3^4.1^2 6.3^2.1^2
14 3^4.1^2 6^2.1^2
14 4^2.1^6 8.2.1^4
14 4^2.1^6 8.2^2.1^2
14 4^2.2^2.1^2 8.4.1^2
14 4^2.2^3 8.2^3
14 4^2.2^3 8.4.2
14 5^2.1^4 5^2.1^4
14 5^2.1^4 5^2.2.1^2
14 5^2.1^4 10.1^4
14 5^2.1^4 10.2.1^2
14 6^2.1^2 12.1^2
14 6^2.2 6^2.2
14 6^2.2 12.2
14 7.1^7 7.2^3.1
14 7^2 2^3.1^8
14 7^2 2^4.1^6
14 7^2 2^5.1^4
14 7^2 2^6.1^2
14 7^2 7.1^7
14 7^2 7.2.1^5
14 7^2 7.2^2.1^3
14 7^2 7.2^3.1
14 7^2 7^2
14 9.1^5 9.2^2.1
14 10.2^2 10.2^2
14 10.2^2 10.4
14 11.1^3 11.2.1
14 13.1 13.1
14 14 2^7
14 14 4.2^5
14 14 4^2.2^3
14 14 4^3.2
14 14 14
15 1^15 1^15
15 1^15 2.1^13
15 1^15 2^2.1^11
15 1^15 2^3.1^9
15 1^15 2^4.1^7
15 1^15 2^5.1^5
15 1^15 2^6.1^3
15 1^15 2^7.1
15 2^4.1^7 4^2.2.1^5
15 2^4.1^7 4^2.2^2.1^3
15 2^4.1^7 4^2.2^3.1
15 2^6.1^3 4^3.1^3
15 2^6.1^3 4^3.2.1
15 3^4.1^3 3^4.1^3
15 3^4.1^3 3^4.2.1
15 3^4.1^3 6.3^2.1^3
15 3^4.1^3 6.3^2.2.1
15 3^4.1^3 6^2.1^3
15 3^4.1^3 6^2.2.1
15 3^5 2^5.1^5
15 3^5 2^6.1^3
15 3^5 2^7.1
15 3^5 3.2^4.1^4
15 3^5 3.2^5.1^2
15 3^5 3.2^6
15 3^5 3^2.2^3.1^3
15 3^5 3^2.2^4.1
15 3^5 3^3.2^2.1^2
15 3^5 3^3.2^3
15 3^5 3^4.2.1
15 3^5 3^5
15 3^5 6.2^2.1^5
15 3^5 6.2^3.1^3
15 3^5 6.2^4.1
15 3^5 6.3.2.1^4
15 3^5 6.3.2^2.1^2
15 3^5 6.3.2^3
15 3^5 6.3^2.1^3
15 3^5 6.3^2.2.1
15 3^5 6.3^3
15 3^5 6^2.1^3
15 3^5 6^2.2.1
15 3^5 6^2.3
15 4^2.1^7 8.2^2.1^3
15 4^2.1^7 8.2^3.1
15 5^2.1^5 5^2.1^5
15 5^2.1^5 5^2.2.1^3
15 5^2.1^5 5^2.2^2.1
15 5^2.1^5 10.1^5
15 5^2.1^5 10.2.1^3
15 5^2.1^5 10.2^2.1
15 5^3 2^6.1^3
15 5^3 2^7.1
15 5^3 5.2^4.1^2
15 5^3 5.2^5
15 5^3 5^2.2^2.1
15 5^3 5^3
15 5^3 10.2.1^3
15 5^3 10.2^2.1
15 5^3 10.5
15 6^2.1^3 12.1^3
15 6^2.1^3 12.2.1
15 6^2.3 4^3.2.1
15 6^2.3 4^3.3
15 6^2.3 12.2.1
15 6^2.3 12.3
15 7^2.1 7^2.1
15 7^2.1 14.1
15 15 2^7.1
15 15 3.2^6
15 15 5.2^5
15 15 6.2^4.1
15 15 6.3.2^3
15 15 6.5.2^2
15 15 6^2.2.1
15 15 6^2.3
15 15 10.2^2.1
15 15 10.3.2
15 15 10.5
15 15 15
16 1^16 1^16
16 1^16 2.1^14
16 1^16 2^2.1^12
16 1^16 2^3.1^10
16 1^16 2^4.1^8
16 1^16 2^5.1^6
16 1^16 2^6.1^4
16 1^16 2^7.1^2
16 2^4.1^8 4^2.2.1^6
16 2^4.1^8 4^2.2^2.1^4
16 2^4.1^8 4^2.2^3.1^2
16 2^6.1^4 4^3.1^4
16 2^6.1^4 4^3.2.1^2
16 2^8 2.1^14
16 2^8 2^2.1^12
16 2^8 2^3.1^10
16 2^8 2^4.1^8
16 2^8 2^5.1^6
16 2^8 2^6.1^4
16 2^8 2^7.1^2
16 2^8 2^8
16 2^8 4.1^12
16 2^8 4.2.1^10
16 2^8 4.2^2.1^8
16 2^8 4.2^3.1^6
16 2^8 4.2^4.1^4
16 2^8 4.2^5.1^2
16 2^8 4.2^6
16 2^8 4^2.1^8
16 2^8 4^2.2.1^6
16 2^8 4^2.2^2.1^4
16 2^8 4^2.2^3.1^2
16 2^8 4^2.2^4
16 2^8 4^3.1^4
16 2^8 4^3.2.1^2
16 2^8 4^3.2^2
16 2^8 4^4
16 3^3.1^7 3^3.2^2.1^3
16 3^3.1^7 3^3.2^3.1
16 3^3.1^7 6.3.2^2.1^3
16 3^3.1^7 6.3.2^3.1
16 3^4.1^4 3^4.1^4
16 3^4.1^4 3^4.2.1^2
16 3^4.1^4 6.3^2.1^4
16 3^4.1^4 6.3^2.2.1^2
16 3^4.1^4 6^2.1^4
16 3^4.1^4 6^2.2.1^2
16 3^5.1 3^5.1
16 3^5.1 6.3^3.1
16 3^5.1 6^2.3.1
16 4^2.1^8 8.2^2.1^4
16 4^2.1^8 8.2^3.1^2
16 4^2.2^4 8.2^2.1^4
16 4^2.2^4 8.2^3.1^2
16 4^2.2^4 8.2^4
16 4^2.2^4 8.4.1^4
16 4^2.2^4 8.4.2.1^2
16 4^2.2^4 8.4.2^2
16 4^2.2^4 8.4^2
16 4^4 2^2.1^12
16 4^4 2^3.1^10
16 4^4 2^4.1^8
16 4^4 2^5.1^6
16 4^4 2^6.1^4
16 4^4 2^7.1^2
16 4^4 2^8
16 4^4 4.1^12
16 4^4 4.2.1^10
16 4^4 4.2^2.1^8
16 4^4 4.2^3.1^6
16 4^4 4.2^4.1^4
16 4^4 4.2^5.1^2
16 4^4 4.2^6
16 4^4 4^2.1^8
16 4^4 4^2.2.1^6
16 4^4 4^2.2^2.1^4
16 4^4 4^2.2^3.1^2
16 4^4 4^2.2^4
16 4^4 4^3.1^4
16 4^4 4^3.2.1^2
16 4^4 4^3.2^2
16 4^4 4^4
16 4^4 8.1^8
16 4^4 8.2.1^6
16 4^4 8.2^2.1^4
16 4^4 8.2^3.1^2
16 4^4 8.2^4
16 4^4 8.4.1^4
16 4^4 8.4.2.1^2
16 4^4 8.4.2^2
16 4^4 8.4^2
16 4^4 8^2
16 5^2.1^6 5^2.1^6
16 5^2.1^6 5^2.2.1^4
16 5^2.1^6 5^2.2^2.1^2
16 5^2.1^6 10.1^6
16 5^2.1^6 10.2.1^4
16 5^2.1^6 10.2^2.1^2
16 5^3.1 5^3.1
16 5^3.1 10.5.1
16 6^2.1^4 12.1^4
16 6^2.1^4 12.2.1^2
16 6^2.2^2 3^4.2.1^2
16 6^2.2^2 3^4.2^2
16 6^2.2^2 4.3^4
16 6^2.2^2 6.3^2.2.1^2
16 6^2.2^2 6.3^2.2^2
16 6^2.2^2 6.4.3^2
16 6^2.2^2 6^2.2.1^2
16 6^2.2^2 6^2.2^2
16 6^2.2^2 6^2.4
16 6^2.2^2 12.2.1^2
16 6^2.2^2 12.2^2
16 6^2.2^2 12.4
16 7^2.1^2 7^2.1^2
16 7^2.1^2 14.1^2
16 8^2 2^4.1^8
16 8^2 2^5.1^6
16 8^2 2^6.1^4
16 8^2 2^7.1^2
16 8^2 2^8
16 8^2 4.2^2.1^8
16 8^2 4.2^3.1^6
16 8^2 4.2^4.1^4
16 8^2 4.2^5.1^2
16 8^2 4.2^6
16 8^2 4^2.1^8
16 8^2 4^2.2.1^6
16 8^2 4^2.2^2.1^4
16 8^2 4^2.2^3.1^2
16 8^2 4^2.2^4
16 8^2 4^3.1^4
16 8^2 4^3.2.1^2
16 8^2 4^3.2^2
16 8^2 4^4
16 8^2 8.1^8
16 8^2 8.2.1^6
16 8^2 8.2^2.1^4
16 8^2 8.2^3.1^2
16 8^2 8.2^4
16 8^2 8.4.1^4
16 8^2 8.4.2.1^2
16 8^2 8.4.2^2
16 8^2 8.4^2
16 8^2 8^2
16 8^2 16
16 10.2^3 5^2.2^3
16 10.2^3 5^2.4.2
16 10.2^3 10.2^3
16 10.2^3 10.4.2
16 12.4 3^4.2^2
16 12.4 4.3^4
16 12.4 6.3^2.2^2
16 12.4 6.4.3^2
16 12.4 6^2.2^2
16 12.4 6^2.4
16 12.4 12.2^2
16 12.4 12.4
16 14.2 7^2.2
16 14.2 14.2
16 16 2^8
16 16 4.2^6
16 16 4^2.2^4
16 16 4^3.2^2
16 16 4^4
16 16 8.2^4
16 16 8.4.2^2
16 16 8.4^2
16 16 8^2
16 16 16
17 1^17 1^17
17 1^17 2.1^15
17 1^17 2^2.1^13
17 1^17 2^3.1^11
17 1^17 2^4.1^9
17 1^17 2^5.1^7
17 1^17 2^6.1^5
17 1^17 2^7.1^3
17 1^17 2^8.1
17 2^6.1^5 4^3.1^5
17 2^6.1^5 4^3.2.1^3
17 2^6.1^5 4^3.2^2.1
17 3^4.1^5 3^4.1^5
17 3^4.1^5 3^4.2.1^3
17 3^4.1^5 3^4.2^2.1
17 3^4.1^5 6.3^2.1^5
17 3^4.1^5 6.3^2.2.1^3
17 3^4.1^5 6.3^2.2^2.1
17 3^4.1^5 6^2.1^5
17 3^4.1^5 6^2.2.1^3
17 3^4.1^5 6^2.2^2.1
17 3^5.1^2 6.3^3.1^2
17 3^5.1^2 6^2.3.1^2
17 5^2.1^7 5^2.2.1^5
17 5^2.1^7 5^2.2^2.1^3
17 5^2.1^7 5^2.2^3.1
17 5^2.1^7 10.2.1^5
17 5^2.1^7 10.2^2.1^3
17 5^2.1^7 10.2^3.1
17 6^2.1^5 12.1^5
17 6^2.1^5 12.2.1^3
17 6^2.1^5 12.2^2.1
17 7^2.1^3 7^2.1^3
17 7^2.1^3 7^2.2.1
17 7^2.1^3 14.1^3
17 7^2.1^3 14.2.1
17 17 2^8.1
17 17 17
)tbl";

const char* kTable123Data = R"tbl(# (123) catalogue: n gamma
2 1^2
3 1^3
3 2.1
4 1^4
4 2.1^2
4 2^2
5 1^5
5 2^2.1
5 4.1
6 1^6
6 2^2.1^2
6 3.1^3
7 1^7
7 2^2.1^3
7 2^3.1
7 4.1^3
7 4.2.1
7 5.1^2
7 7
8 1^8
8 2^2.1^4
8 2^3.1^2
8 2^4
8 4.1^4
8 4.2.1^2
8 4.2^2
8 4^2
8 7.1
9 1^9
9 2^3.1^3
9 2^4.1
9 3^2.1^3
9 3^3
9 4^2.1
9 5.1^4
9 6.1^3
9 6.2.1
9 8.1
10 1^10
10 2^3.1^4
10 2^4.1^2
10 3^3.1
10 4^2.1^2
10 5.1^5
10 7.1^3
10 8.1^2
11 1^11
11 2^3.1^5
11 2^4.1^3
11 2^5.1
11 3^3.1^2
11 4^2.1^3
11 4^2.2.1
11 5^2.1
11 7.1^4
11 10.1
12 1^12
12 2^3.1^6
12 2^4.1^4
12 2^5.1^2
12 2^6
12 3^2.1^6
12 3^3.1^3
12 4^2.1^4
12 4^2.2.1^2
12 4^2.2^2
12 5^2.1^2
12 6.1^6
12 6.2^2.1^2
12 6.3.1^3
12 8.1^4
12 8.2.1^2
12 8.2^2
12 9.1^3
13 1^13
13 2^4.1^5
13 2^5.1^3
13 2^6.1
13 3^3.1^4
13 4^2.1^5
13 4^2.2^2.1
13 4^3.1
13 5^2.1^3
13 7.1^6
13 8.1^5
13 8.2^2.1
13 8.4.1
13 10.1^3
13 10.2.1
13 11.1^2
13 13
14 1^14
14 2^4.1^6
14 2^5.1^4
14 2^6.1^2
14 3^3.1^5
14 4^2.1^6
14 4^2.2^2.1^2
14 4^3.1^2
14 5^2.1^4
14 7.1^7
14 7^2
14 10.1^4
14 10.2.1^2
14 13.1
15 1^15
15 2^4.1^7
15 2^5.1^5
15 2^6.1^3
15 2^7.1
15 3^3.1^6
15 3^4.1^3
15 4^2.1^7
15 4^2.2^2.1^3
15 4^2.2^3.1
15 4^3.1^3
15 4^3.2.1
15 5^2.1^5
15 5^3
15 6^2.1^3
15 6^2.2.1
15 7^2.1
15 8.1^7
15 8.2^2.1^3
15 8.2^3.1
15 8.4.1^3
15 8.4.2.1
15 9.1^6
15 9.3.1^3
15 11.1^4
15 12.1^3
15 12.2.1
15 14.1
16 1^16
16 2^4.1^8
16 2^5.1^6
16 2^6.1^4
16 2^7.1^2
16 2^8
16 3^3.1^7
16 4^2.1^8
16 4^2.2^2.1^4
16 4^2.2^3.1^2
16 4^2.2^4
16 4^3.1^4
16 4^3.2.1^2
16 4^3.2^2
16 4^4
16 5^2.1^6
16 5^3.1
16 6.3.2^2.1^3
16 7^2.1^2
16 8.1^8
16 8.2^2.1^4
16 8.2^3.1^2
16 8.2^4
16 8.4.1^4
16 8.4.2.1^2
16 8.4.2^2
16 8.4^2
16 8^2
16 10.1^6
16 10.2^2.1^2
16 11.1^5
16 13.1^3
16 14.1^2
17 1^17
17 2^5.1^7
17 2^6.1^5
17 2^7.1^3
17 2^8.1
17 3^3.1^8
17 4^3.1^5
17 4^3.2^2.1
17 4^4.1
17 5^2.1^7
17 5^3.1^2
17 7^2.1^3
17 8^2.1
17 10.1^7
17 10.2^2.1^3
17 10.2^3.1
17 10.5.1^2
17 13.1^4
17 16.1
)tbl";

}  // namespace paratopia
