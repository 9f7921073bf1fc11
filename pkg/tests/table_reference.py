"""Similarity table for the twenty constraint conditions, as published.

HV columns: key (R, s, db) -> values for conditions 1..20. Verdicts use
'Y', 'N', '?' as printed.
"""

HV = {
    (1, 0, False): [1.00, .45, .55, .55, .60, .80, .83, .67, .80, .80, .80, .60, -0.0, .67, .60, .84, .01, .17, .62, .47],
    (1, 0, True): [1.00, .62, .67, .67, .71, .86, .87, .75, .71, .86, .72, .71, -0.0, .75, .71, .76, .01, .25, .71, .59],
    (1, 2, False): [1.00, .45, .55, .55, .60, .80, .83, .67, .80, .80, .80, .60, .51, .67, .60, .84, .85, .51, .62, .47],
    (2, 2, False): [1.00, .67, .76, .73, .55, .80, .83, .67, .80, .80, .80, .80, .50, .67, .70, .85, .85, .68, .77, .77],
    (3, 2, False): [1.00, .75, .83, .79, .53, .80, .83, .63, .80, .80, .80, .87, .67, .78, .73, .85, .85, .73, .84, .84],
    (1, 2, True): [1.00, .62, .67, .67, .71, .86, .87, .75, .71, .86, .72, .71, .41, .75, .71, .76, .75, .63, .71, .59],
    (2, 2, True): [1.00, .77, .80, .79, .74, .89, .90, .80, .67, .89, .67, .89, .42, .80, .83, .75, .75, .70, .81, .81],
    (3, 2, True): [1.00, .84, .87, .85, .74, .90, .91, .79, .65, .90, .65, .93, .53, .88, .86, .75, .75, .79, .87, .87],
}

VERDICTS = {
    (1, 0, False): "YYYYYYYYNYNNYNYY?YYN",
    (1, 0, True): "YYYYYYYYYYYNYNYY?YYN",
    (1, 2, False): "YYYYYYYYNYNNNNYYYNYN",
    (2, 2, False): "YYYYYYYYNYNYYNYYYYYY",
    (3, 2, False): "YYYYYYYYNYNYNYYYYYYY",
    (1, 2, True): "YYYYYYYYYYYNYNYYYYYN",
    (2, 2, True): "YYYYYYYYYYYYYNYYYYYY",
    (3, 2, True): "YYYYYYYYYYYYYYYYYYYY",
}

NEG_LEV = [0, -1, -1, -1, -2, -1, -1, -2, -1, -1, -1, -2, -5, -2, -2, -2, -2, -2, -1, -1]
NEG_LEV_DB = [0, -1, -1, -1, -2, -1, -1, -2, -2, -1, -2, -2, -7, -2, -2, -3, -3, -2, -1, -1]
