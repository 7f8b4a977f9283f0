s = eval(input())
b = eval(input())
n = s + b
print(n)
print(n + 7)
print(n == s + b)
print([s, b, n])
