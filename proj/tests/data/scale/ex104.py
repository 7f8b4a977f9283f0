k = eval(input())
x = eval(input())
b = k + x
print(b)
print(b + 2)
print(b == k + x)
print([k, x, b])
