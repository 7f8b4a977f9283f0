def dbl(n):
    return n + n
a = eval(input())
print(dbl(a))
print(dbl(dbl(a)) + 4)
print(dbl(a) == a + a)
