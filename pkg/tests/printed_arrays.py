"""Constraint arrays exactly as printed (LaTeX rows), for string-level comparison."""

SIMPLE_EMPTY = [
    r"&0\leq a_{4,\,1}=a_{3,\,1}= a_{2,\,1}\leq a_{1,\,1}=1\\",
    r"&0\leq a_{4,\,2}\leq a_{3,\,2}\leq a_{2,\,2}=3-a_{2,\,1}\\",
    r"&0\leq a_{4,\,3}\leq a_{3,\,3}= 4-a_{3,\,1}-a_{3,\,2}\\",
    # printed with a repeated a_{4,2}; the last term is a_{4,3}
    r"&0\leq a_{4,\,4}=6-a_{4,\,1}-a_{4,\,2}-a_{4,\,3}",
]

SIMPLE_F = [
    r"0$\leq a_{4,\,1}=a_{3,\,1}= a_{2,\,1}\leq a_{1,\,1}=1$\\",
    r"2$\leq a_{4,\,2}+2\leq a_{3,\,2}+1\leq a_{2,\,2}=3-a_{2,\,1}$\\",
    r"1$\leq a_{4,\,3}+1\leq a_{3,\,3}= 3-a_{3,\,1}-a_{3,\,2}$\\",
    r"0$\leq a_{4,\,4}=3-a_{4,\,1}-a_{4,\,2}-a_{4,\,3}$",
]
SIMPLE_F_EDGES = "2-3,2-4,3-4"

MULTI_EMPTY = [
    r"&0\leq a_{4,\,1}^{(1)}=a_{3,\,1}^{(1)}= a_{2,\,1}^{(1)}\leq a_{2,\,1}^{(2)}\leq a^{(1)}_{1,\,1}=2\\",
    r"&0\leq a_{4,\,2}^{(1)}\leq a_{3,\,2}^{(1)}\leq a_{2,\,2}^{(1)}=5-a^{(1)}_{2,\,1}\\",
    r"&0\leq a_{4,\,3}^{(1)}\leq a_{4,\,3}^{(2)} \leq a_{3,\,3}^{(1)}= 6-a_{3,\,1}^{(1)}-a_{3,\,2}^{(1)}\\",
    r"&0\leq a_{4,\,4}^{(1)}=9-a_{4,\,1}^{(1)}-a_{4,\,2}^{(1)}-a_{4,\,3}^{(1)}",
]

MULTI_F = [
    r"&2\leq a_{4,\,1}^{(1)}+2=a_{3,\,1}^{(1)}+2= a_{2,\,1}^{(1)}+2\leq a_{2,\,1}^{(2)}+2\leq a^{(1)}_{1,\,1}=2\\",
    r"&1\leq a_{4,\,2}^{(1)}+1\leq a_{3,\,2}^{(1)}+1\leq a_{2,\,2}^{(1)}=3-a^{(1)}_{2,\,1}\\",
    r"&0\leq a_{4,\,3}^{(1)}\leq a_{4,\,3}^{(2)} \leq a_{3,\,3}^{(1)}= 3-a_{3,\,1}^{(1)}-a_{3,\,2}^{(1)}\\",
    r"&0\leq a_{4,\,4}^{(1)}=6-a_{4,\,1}^{(1)}-a_{4,\,2}^{(1)}-a_{4,\,3}^{(1)}",
]
MULTI_F_EDGES = "1-2,1-2,2-3"
