def dbl(y):
    return y + y
n = eval(input())
print(dbl(n))
print(dbl(dbl(n)) + 2)
print(dbl(n) == n + n)
